#include "eqhom/homalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace eqhom {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: sum shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += c * at(k, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) = -at(k, i);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

namespace {

// Row/column operations applied simultaneously to the working matrix, the
// accumulated transforms and their inverses, keeping A = U * input * V.
struct SnfWork {
    IntMatrix A, U, V, Ui, Vi;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        A.swap_rows(i, j);
        U.swap_rows(i, j);
        Ui.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        A.swap_cols(i, j);
        V.swap_cols(i, j);
        Vi.swap_rows(i, j);
    }
    void add_row(std::size_t dst, std::size_t src, const Int& c) {
        A.add_row_multiple(dst, src, c);
        U.add_row_multiple(dst, src, c);
        Ui.add_col_multiple(src, dst, -c);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& c) {
        A.add_col_multiple(dst, src, c);
        V.add_col_multiple(dst, src, c);
        Vi.add_row_multiple(src, dst, -c);
    }
    void negate_row(std::size_t i) {
        A.negate_row(i);
        U.negate_row(i);
        Ui.negate_col(i);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    SnfWork w{m, IntMatrix::identity(nr), IntMatrix::identity(nc),
              IntMatrix::identity(nr), IntMatrix::identity(nc)};
    const std::size_t limit = std::min(nr, nc);

    for (std::size_t t = 0; t < limit; ++t) {
        bool exhausted = false;
        for (;;) {
            // Pivot rule: nonzero entry of minimal absolute value in the
            // trailing submatrix, ties broken by smallest (row, col).
            std::size_t pi = 0, pj = 0;
            bool found = false;
            Int best;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    const Int& a = w.A.at(i, j);
                    if (a == 0) continue;
                    Int v = abs(a);
                    if (!found || v < best) {
                        found = true;
                        best = std::move(v);
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) {
                exhausted = true;
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                const Int& a = w.A.at(i, t);
                if (a == 0) continue;
                Int q = a / w.A.at(t, t);
                if (q != 0) w.add_row(i, t, -q);
                if (w.A.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                const Int& a = w.A.at(t, j);
                if (a == 0) continue;
                Int q = a / w.A.at(t, t);
                if (q != 0) w.add_col(j, t, -q);
                if (w.A.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pull a non-divisible entry into row t so the chain condition
            // holds; the next pass shrinks the pivot.
            bool pulled = false;
            for (std::size_t i = t + 1; i < nr && !pulled; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (w.A.at(i, j) % w.A.at(t, t) != 0) {
                        w.add_row(t, i, Int(1));
                        pulled = true;
                        break;
                    }
            if (!pulled) break;
        }
        if (exhausted) break;
        if (w.A.at(t, t) < 0) w.negate_row(t);
    }

    if (w.U * m * w.V != w.A)
        throw std::logic_error("smith_normal_form: decomposition check failed");
    return {std::move(w.U), std::move(w.A), std::move(w.V), std::move(w.Ui), std::move(w.Vi)};
}

IntMatrix kernel_lattice(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    const std::size_t diag = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    for (std::size_t i = 0; i < diag; ++i)
        if (s.D.at(i, i) != 0) ++rank;
    IntMatrix k(m.cols(), m.cols() - rank);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) k.at(i, j) = s.V.at(i, rank + j);
    return k;
}

std::optional<IntMatrix> solve_matrix(const IntMatrix& m, const IntMatrix& rhs) {
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
    SmithResult s = smith_normal_form(m);
    IntMatrix y = s.U * rhs;
    const std::size_t diag = std::min(m.rows(), m.cols());
    IntMatrix x(m.cols(), rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Int d = i < diag ? s.D.at(i, i) : Int(0);
            if (d != 0) {
                if (y.at(i, c) % d != 0) return std::nullopt;
                x.at(i, c) = y.at(i, c) / d;
            } else if (y.at(i, c) != 0) {
                return std::nullopt;
            }
        }
    }
    return s.V * x;
}

FgAbGroup FgAbGroup::canonical(std::size_t free_rank, std::vector<Int> torsion) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2)
            throw std::invalid_argument("FgAbGroup::canonical: torsion coefficient < 2");
        if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
            throw std::invalid_argument("FgAbGroup::canonical: divisibility chain violated");
    }
    FgAbGroup g;
    g.free_rank_ = free_rank;
    g.torsion_ = std::move(torsion);
    auto pres = std::make_shared<Presentation>();
    const std::size_t n = g.gens();
    pres->relations = IntMatrix(g.torsion_.size(), n);
    for (std::size_t t = 0; t < g.torsion_.size(); ++t)
        pres->relations.at(t, free_rank + t) = g.torsion_[t];
    pres->to_canonical = IntMatrix::identity(n);
    pres->from_canonical = IntMatrix::identity(n);
    g.pres_ = std::move(pres);
    return g;
}

Int FgAbGroup::gen_order(std::size_t i) const {
    return i < free_rank_ ? Int(0) : torsion_[i - free_rank_];
}

IntMatrix FgAbGroup::relation_matrix() const {
    IntMatrix n(gens(), torsion_.size());
    for (std::size_t t = 0; t < torsion_.size(); ++t) n.at(free_rank_ + t, t) = torsion_[t];
    return n;
}

IntMatrix FgAbGroup::reduce_vectors(IntMatrix vecs) const {
    if (vecs.rows() != gens()) throw std::invalid_argument("reduce_vectors: shape mismatch");
    for (std::size_t t = 0; t < torsion_.size(); ++t)
        for (std::size_t c = 0; c < vecs.cols(); ++c)
            vecs.at(free_rank_ + t, c) = mod_floor(vecs.at(free_rank_ + t, c), torsion_[t]);
    return vecs;
}

std::size_t FgAbGroup::presentation_gens() const {
    if (!pres_) throw std::logic_error("FgAbGroup: no presentation recorded");
    return pres_->from_canonical.rows();
}

const IntMatrix& FgAbGroup::relations() const {
    if (!pres_) throw std::logic_error("FgAbGroup: no presentation recorded");
    return pres_->relations;
}

const IntMatrix& FgAbGroup::to_canonical() const {
    if (!pres_) throw std::logic_error("FgAbGroup: no presentation recorded");
    return pres_->to_canonical;
}

const IntMatrix& FgAbGroup::from_canonical() const {
    if (!pres_) throw std::logic_error("FgAbGroup: no presentation recorded");
    return pres_->from_canonical;
}

std::string FgAbGroup::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (free_rank_ == 1) out = "Z";
    else if (free_rank_ > 1) out = "Z^" + std::to_string(free_rank_);
    for (const Int& d : torsion_) {
        if (!out.empty()) out += " ⊕ ";
        out += "Z/" + d.str();
    }
    return out;
}

namespace {

// Presentations already in canonical shape (one relation d_t * e_{free+t} per
// row, chain intact) keep the identity change of basis, so canonicalization
// is idempotent on the nose.
std::optional<FgAbGroup> canonical_fast_path(const IntMatrix& rels, std::size_t generators) {
    if (rels.rows() > generators) return std::nullopt;
    const std::size_t free_rank = generators - rels.rows();
    std::vector<Int> torsion;
    for (std::size_t r = 0; r < rels.rows(); ++r) {
        for (std::size_t c = 0; c < generators; ++c) {
            const Int& v = rels.at(r, c);
            if (c == free_rank + r) {
                if (v < 2) return std::nullopt;
            } else if (v != 0) {
                return std::nullopt;
            }
        }
        torsion.push_back(rels.at(r, free_rank + r));
        if (r > 0 && torsion[r] % torsion[r - 1] != 0) return std::nullopt;
    }
    return FgAbGroup::canonical(free_rank, std::move(torsion));
}

}  // namespace

FgAbGroup group_from_presentation(const IntMatrix& rels, std::size_t generators) {
    if (rels.rows() > 0 && rels.cols() != generators)
        throw std::invalid_argument("group_from_presentation: relation width != generators");
    if (auto fast = canonical_fast_path(rels, generators)) return *fast;
    IntMatrix m = rels.rows() > 0 ? rels.transpose() : IntMatrix(generators, 0);
    SmithResult s = smith_normal_form(m);
    const std::size_t diag = std::min(generators, m.cols());

    std::vector<std::size_t> free_idx, tors_idx;
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < generators; ++i) {
        Int d = i < diag ? s.D.at(i, i) : Int(0);
        if (d == 0) free_idx.push_back(i);
        else if (d >= 2) {
            tors_idx.push_back(i);
            torsion.push_back(std::move(d));
        }
    }

    FgAbGroup g;
    g.free_rank_ = free_idx.size();
    g.torsion_ = std::move(torsion);

    std::vector<std::size_t> order = free_idx;
    order.insert(order.end(), tors_idx.begin(), tors_idx.end());

    auto pres = std::make_shared<FgAbGroup::Presentation>();
    pres->relations = rels;
    pres->to_canonical = IntMatrix(order.size(), generators);
    pres->from_canonical = IntMatrix(generators, order.size());
    for (std::size_t c = 0; c < order.size(); ++c) {
        for (std::size_t j = 0; j < generators; ++j) {
            pres->to_canonical.at(c, j) = s.U.at(order[c], j);
            pres->from_canonical.at(j, c) = s.U_inv.at(j, order[c]);
        }
    }
    pres->to_canonical = g.reduce_vectors(std::move(pres->to_canonical));
    g.pres_ = std::move(pres);
    return g;
}

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)) {
    if (matrix.rows() != target_.gens() || matrix.cols() != source_.gens())
        throw std::invalid_argument("AbHom: matrix shape mismatch");
    for (std::size_t i = 0; i < source_.gens(); ++i) {
        const Int d = source_.gen_order(i);
        if (d == 0) continue;
        for (std::size_t j = 0; j < target_.gens(); ++j) {
            const Int e = target_.gen_order(j);
            Int v = d * matrix.at(j, i);
            if (e == 0 ? v != 0 : v % e != 0)
                throw std::invalid_argument("AbHom: matrix does not respect relations");
        }
    }
    matrix_ = target_.reduce_vectors(std::move(matrix));
}

AbHom AbHom::identity(const FgAbGroup& g) {
    return AbHom(g, g, IntMatrix::identity(g.gens()));
}

AbHom AbHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return AbHom(source, target, IntMatrix(target.gens(), source.gens()));
}

bool AbHom::is_identity() const {
    return source_ == target_ && matrix_ == IntMatrix::identity(source_.gens());
}

AbHom hom_compose(const AbHom& g, const AbHom& f) {
    if (f.target() != g.source())
        throw std::invalid_argument("hom_compose: source/target mismatch");
    return AbHom(f.source(), g.target(), g.matrix() * f.matrix());
}

AbHom hom_add(const AbHom& a, const AbHom& b) {
    if (a.source() != b.source() || a.target() != b.target())
        throw std::invalid_argument("hom_add: shape mismatch");
    return AbHom(a.source(), a.target(), a.matrix() + b.matrix());
}

AbHom hom_from_presentation_gens(const FgAbGroup& source, const FgAbGroup& target,
                                 const IntMatrix& on_presentation_gens) {
    if (on_presentation_gens.rows() != target.gens() ||
        on_presentation_gens.cols() != source.presentation_gens())
        throw std::invalid_argument("hom_from_presentation_gens: shape mismatch");
    IntMatrix images = on_presentation_gens * source.relations().transpose();
    for (std::size_t c = 0; c < images.cols(); ++c)
        for (std::size_t j = 0; j < target.gens(); ++j) {
            const Int e = target.gen_order(j);
            const Int& v = images.at(j, c);
            if (e == 0 ? v != 0 : v % e != 0)
                throw std::invalid_argument(
                    "hom_from_presentation_gens: relation not killed in target");
        }
    return AbHom(source, target, on_presentation_gens * source.from_canonical());
}

DirectSum group_direct_sum(const std::vector<FgAbGroup>& parts) {
    std::size_t total = 0, nrel = 0;
    for (const FgAbGroup& p : parts) {
        total += p.gens();
        nrel += p.torsion().size();
    }
    IntMatrix rels(nrel, total);
    std::size_t off = 0, r = 0;
    for (const FgAbGroup& p : parts) {
        for (std::size_t t = 0; t < p.torsion().size(); ++t, ++r)
            rels.at(r, off + p.free_rank() + t) = p.torsion()[t];
        off += p.gens();
    }
    DirectSum ds;
    ds.group = group_from_presentation(rels, total);
    off = 0;
    for (const FgAbGroup& p : parts) {
        IntMatrix inj(total, p.gens());
        IntMatrix sel(p.gens(), total);
        for (std::size_t i = 0; i < p.gens(); ++i) {
            inj.at(off + i, i) = 1;
            sel.at(i, off + i) = 1;
        }
        ds.inclusions.emplace_back(p, ds.group, ds.group.to_canonical() * inj);
        ds.projections.emplace_back(ds.group, p, sel * ds.group.from_canonical());
        off += p.gens();
    }
    return ds;
}

AbHom hom_direct_sum(const std::vector<AbHom>& parts) {
    std::vector<FgAbGroup> sources, targets;
    for (const AbHom& h : parts) {
        sources.push_back(h.source());
        targets.push_back(h.target());
    }
    DirectSum ds = group_direct_sum(sources);
    DirectSum dt = group_direct_sum(targets);
    IntMatrix m(dt.group.gens(), ds.group.gens());
    for (std::size_t i = 0; i < parts.size(); ++i)
        m = m + dt.inclusions[i].matrix() * parts[i].matrix() * ds.projections[i].matrix();
    return AbHom(ds.group, dt.group, std::move(m));
}

ChainComplex::ChainComplex(std::vector<FgAbGroup> groups, std::vector<AbHom> differentials)
    : groups_(std::move(groups)), diffs_(std::move(differentials)) {
    if (!groups_.empty() && diffs_.size() != groups_.size() - 1)
        throw std::invalid_argument("ChainComplex: need one differential per positive degree");
    for (std::size_t n = 1; n < groups_.size(); ++n) {
        const AbHom& d = diffs_[n - 1];
        if (d.source() != groups_[n] || d.target() != groups_[n - 1])
            throw std::invalid_argument("ChainComplex: differential shape mismatch");
        if (n >= 2 && !hom_compose(diffs_[n - 2], d).is_zero_map())
            throw std::invalid_argument("ChainComplex: d*d != 0 at degree " + std::to_string(n));
    }
}

FgAbGroup ChainComplex::group(std::size_t n) const {
    return n < groups_.size() ? groups_[n] : FgAbGroup();
}

AbHom ChainComplex::differential(std::size_t n) const {
    if (n >= 1 && n < groups_.size()) return diffs_[n - 1];
    return AbHom::zero(group(n), n == 0 ? FgAbGroup() : group(n - 1));
}

FgAbGroup homology_at(const ChainComplex& c, std::size_t n) {
    FgAbGroup cn = c.group(n);
    if (cn.is_zero()) return FgAbGroup();
    AbHom dn = c.differential(n);
    AbHom dn1 = c.differential(n + 1);

    // Cycle lattice: x with dn(x) zero modulo target relations.
    IntMatrix w = hstack(dn.matrix(), dn.target().relation_matrix());
    IntMatrix ker = kernel_lattice(w);
    IntMatrix cycles(cn.gens(), ker.cols());
    for (std::size_t i = 0; i < cycles.rows(); ++i)
        for (std::size_t j = 0; j < cycles.cols(); ++j) cycles.at(i, j) = ker.at(i, j);

    IntMatrix boundaries = hstack(dn1.matrix(), cn.relation_matrix());
    auto coords = solve_matrix(cycles, boundaries);
    if (!coords) throw std::logic_error("homology_at: boundary escapes the cycle lattice");
    return group_from_presentation(coords->transpose(), cycles.cols());
}

}  // namespace eqhom
