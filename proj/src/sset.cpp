#include "eqhom/sset.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqhom {

namespace {

bool word_valid(const std::vector<int>& w, int base_dim) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k + 1 < w.size() && w[k] <= w[k + 1]) return false;
        if (w[k] < 0 || w[k] > base_dim + static_cast<int>(w.size() - k) - 1) return false;
    }
    return true;
}

std::vector<std::vector<int>> trivial_rows(std::size_t order, std::size_t count) {
    std::vector<int> id(count);
    std::iota(id.begin(), id.end(), 0);
    return std::vector<std::vector<int>>(order, id);
}

}  // namespace

SimplexRef degenerate_ref(SimplexRef r, int j) {
    if (r.word.empty() || j > r.word.front()) {
        r.word.insert(r.word.begin(), j);
        return r;
    }
    int h = r.word.front();
    r.word.erase(r.word.begin());
    SimplexRef inner = degenerate_ref(std::move(r), j);
    inner.word.insert(inner.word.begin(), h + 1);
    return inner;
}

GSetPtr SimplicialGSet::degree_gset(int n) const {
    if (n < 0 || n > dim) return trivial_gset(group, 0);
    return make_gset(group, names[n].size(), action[n]);
}

SimplexRef SimplicialGSet::face_of_ref(int n, const SimplexRef& r, int i) const {
    if (r.word.empty()) return faces[n][r.base][i];
    const int j = r.word.front();
    SimplexRef rest{std::vector<int>(r.word.begin() + 1, r.word.end()), r.base};
    if (i == j || i == j + 1) return rest;
    if (i < j) return degenerate_ref(face_of_ref(n - 1, rest, i), j - 1);
    return degenerate_ref(face_of_ref(n - 1, rest, i - 1), j);
}

std::string SimplicialGSet::ref_name(int n, const SimplexRef& r) const {
    std::ostringstream os;
    for (int j : r.word) os << "s" << j << " ";
    os << names[n - static_cast<int>(r.word.size())][r.base];
    return os.str();
}

ValidationReport validate(const SimplicialGSet& x) {
    auto fail = [](const std::string& m) { return ValidationReport{false, m}; };
    const int d = x.dim;
    if (d < 0) return fail("dimension bound must be non-negative");
    if (x.names.size() != static_cast<std::size_t>(d) + 1 ||
        x.faces.size() != static_cast<std::size_t>(d) + 1 ||
        x.action.size() != static_cast<std::size_t>(d) + 1)
        return fail("per-degree tables must cover degrees 0.." + std::to_string(d));

    for (int n = 1; n <= d; ++n) {
        const std::size_t cnt = x.names[n].size();
        if (x.faces[n].size() != cnt)
            return fail("degree " + std::to_string(n) + ": face table size mismatch");
        for (std::size_t s = 0; s < cnt; ++s) {
            if (x.faces[n][s].size() != static_cast<std::size_t>(n) + 1)
                return fail("degree " + std::to_string(n) + ", simplex '" + x.names[n][s] +
                            "': expected " + std::to_string(n + 1) + " faces");
            for (int i = 0; i <= n; ++i) {
                const SimplexRef& f = x.faces[n][s][i];
                int bd = n - 1 - static_cast<int>(f.word.size());
                if (bd < 0 || bd > d || f.base < 0 ||
                    static_cast<std::size_t>(f.base) >= x.names[bd].size())
                    return fail("degree " + std::to_string(n) + ", simplex '" + x.names[n][s] +
                                "', face " + std::to_string(i) + ": target out of range");
                if (!word_valid(f.word, bd))
                    return fail("degree " + std::to_string(n) + ", simplex '" + x.names[n][s] +
                                "', face " + std::to_string(i) +
                                ": degeneracy word not in normal form");
            }
        }
    }

    for (int n = 0; n <= d; ++n) {
        try {
            make_gset(x.group, x.names[n].size(), x.action[n]);
        } catch (const std::invalid_argument& e) {
            return fail("degree " + std::to_string(n) + ": " + std::string(e.what()));
        }
    }

    // The action commutes with the face maps.
    for (int n = 1; n <= d; ++n)
        for (std::size_t g = 0; g < x.group->order; ++g)
            for (std::size_t s = 0; s < x.names[n].size(); ++s)
                for (int i = 0; i <= n; ++i) {
                    const SimplexRef& a = x.faces[n][x.action[n][g][s]][i];
                    SimplexRef b = x.act_on_ref(static_cast<int>(g), n - 1, x.faces[n][s][i]);
                    if (a != b)
                        return fail("degree " + std::to_string(n) + ", simplex '" +
                                    x.names[n][s] + "', face " + std::to_string(i) +
                                    ": action is not equivariant");
                }

    // Simplicial identities d_i d_j = d_{j-1} d_i for i < j.
    for (int n = 2; n <= d; ++n)
        for (std::size_t s = 0; s < x.names[n].size(); ++s)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    SimplexRef a = x.face_of_ref(n - 1, x.faces[n][s][j], i);
                    SimplexRef b = x.face_of_ref(n - 1, x.faces[n][s][i], j - 1);
                    if (a != b)
                        return fail("degree " + std::to_string(n) + ", simplex '" +
                                    x.names[n][s] + "': identity d" + std::to_string(i) + " d" +
                                    std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
                                    std::to_string(i) + " fails");
                }

    return {};
}

SimplicialGSet validated(SimplicialGSet x) {
    ValidationReport r = validate(x);
    if (!r.ok) throw std::invalid_argument("simplicial G-set invalid: " + r.message);
    return x;
}

FixedPointSSet fixed_point_sset(const SimplicialGSet& x, const Subgroup& h) {
    FixedPointSSet out;
    out.sset.group = make_cyclic(1);
    out.sset.dim = x.dim;
    out.original_index.resize(x.dim + 1);
    std::vector<std::vector<int>> fixed_pos(x.dim + 1);

    for (int n = 0; n <= x.dim; ++n) {
        fixed_pos[n].assign(x.count(n), -1);
        std::vector<std::string> nm;
        for (std::size_t s = 0; s < x.count(n); ++s) {
            bool fixed = true;
            for (int e : h.elements)
                if (x.action[n][e][s] != static_cast<int>(s)) {
                    fixed = false;
                    break;
                }
            if (!fixed) continue;
            fixed_pos[n][s] = static_cast<int>(out.original_index[n].size());
            out.original_index[n].push_back(static_cast<int>(s));
            nm.push_back(x.names[n][s]);
        }
        out.sset.names.push_back(std::move(nm));
        out.sset.action.push_back(trivial_rows(1, out.original_index[n].size()));
    }

    out.sset.faces.resize(x.dim + 1);
    for (int n = 1; n <= x.dim; ++n)
        for (int s : out.original_index[n]) {
            std::vector<SimplexRef> fs;
            for (int i = 0; i <= n; ++i) {
                const SimplexRef& f = x.faces[n][s][i];
                int bd = n - 1 - static_cast<int>(f.word.size());
                int pos = fixed_pos[bd][f.base];
                if (pos < 0)
                    throw std::logic_error("fixed_point_sset: face of a fixed simplex not fixed");
                fs.push_back(SimplexRef{f.word, pos});
            }
            out.sset.faces[n].push_back(std::move(fs));
        }
    out.sset = validated(std::move(out.sset));
    return out;
}

QuotientSSet quotient_sset(const SimplicialGSet& x) {
    QuotientSSet out;
    out.sset.group = make_cyclic(1);
    out.sset.dim = x.dim;
    out.projection.resize(x.dim + 1);
    std::vector<std::vector<int>> reps(x.dim + 1);

    for (int n = 0; n <= x.dim; ++n) {
        out.projection[n].assign(x.count(n), static_cast<std::size_t>(-1));
        for (std::size_t s = 0; s < x.count(n); ++s) {
            if (out.projection[n][s] != static_cast<std::size_t>(-1)) continue;
            std::size_t o = reps[n].size();
            reps[n].push_back(static_cast<int>(s));
            for (std::size_t g = 0; g < x.group->order; ++g)
                out.projection[n][x.action[n][g][s]] = o;
        }
        std::vector<std::string> nm;
        for (int r : reps[n]) nm.push_back(x.names[n][r]);
        out.sset.names.push_back(std::move(nm));
        out.sset.action.push_back(trivial_rows(1, reps[n].size()));
    }

    out.sset.faces.resize(x.dim + 1);
    for (int n = 1; n <= x.dim; ++n)
        for (int r : reps[n]) {
            std::vector<SimplexRef> fs;
            for (int i = 0; i <= n; ++i) {
                const SimplexRef& f = x.faces[n][r][i];
                int bd = n - 1 - static_cast<int>(f.word.size());
                fs.push_back(SimplexRef{f.word, static_cast<int>(out.projection[bd][f.base])});
            }
            out.sset.faces[n].push_back(std::move(fs));
        }
    out.sset = validated(std::move(out.sset));
    return out;
}

int RefSet::index_of(const SimplexRef& r) const {
    auto it = index.find(r);
    if (it == index.end()) throw std::logic_error("RefSet: unknown simplex reference");
    return it->second;
}

RefSet materialize_degree(const SimplicialGSet& x, int n) {
    RefSet rs;
    rs.degree = n;
    for (int len = 0; len <= n; ++len) {
        int bd = n - len;
        if (bd > x.dim || x.count(bd) == 0) continue;
        // Strictly decreasing words with entries below n, filtered for
        // validity over a base of dimension bd, in lexicographic order.
        std::vector<std::vector<int>> words;
        std::vector<int> pick;
        auto choose = [&](auto&& self, int start) -> void {
            if (static_cast<int>(pick.size()) == len) {
                std::vector<int> word(pick.rbegin(), pick.rend());
                if (word_valid(word, bd)) words.push_back(std::move(word));
                return;
            }
            for (int v = start; v < n; ++v) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        };
        choose(choose, 0);
        std::sort(words.begin(), words.end());
        for (std::size_t b = 0; b < x.count(bd); ++b)
            for (const auto& word : words)
                rs.refs.push_back(SimplexRef{word, static_cast<int>(b)});
    }
    std::sort(rs.refs.begin(), rs.refs.end());
    for (std::size_t i = 0; i < rs.refs.size(); ++i) rs.index[rs.refs[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> act(x.group->order, std::vector<int>(rs.refs.size()));
    for (std::size_t g = 0; g < x.group->order; ++g)
        for (std::size_t i = 0; i < rs.refs.size(); ++i)
            act[g][i] = rs.index.at(x.act_on_ref(static_cast<int>(g), n, rs.refs[i]));
    rs.set = make_gset(x.group, rs.refs.size(), std::move(act));
    return rs;
}

SimplicialGSet point_space(GroupPtr g) {
    SimplicialGSet x;
    x.dim = 0;
    x.names = {{"*"}};
    x.faces.resize(1);
    x.action = {trivial_rows(g->order, 1)};
    x.group = std::move(g);
    return validated(std::move(x));
}

SimplicialGSet interval_space(GroupPtr g) {
    SimplicialGSet x;
    x.dim = 1;
    x.names = {{"v0", "v1"}, {"e"}};
    x.faces.resize(2);
    x.faces[1] = {{SimplexRef{{}, 1}, SimplexRef{{}, 0}}};  // d0 = v1, d1 = v0
    x.action = {trivial_rows(g->order, 2), trivial_rows(g->order, 1)};
    x.group = std::move(g);
    return validated(std::move(x));
}

namespace {

SimplicialGSet circle_loop(GroupPtr g, int k, const std::vector<int>& vertex_shift) {
    // Oriented loop: edge e_i runs from v_i to v_{i+1}; a shift rotates both.
    SimplicialGSet x;
    x.dim = 1;
    x.names.resize(2);
    for (int i = 0; i < k; ++i) x.names[0].push_back("v" + std::to_string(i));
    for (int i = 0; i < k; ++i) x.names[1].push_back("e" + std::to_string(i));
    x.faces.resize(2);
    for (int i = 0; i < k; ++i)
        x.faces[1].push_back({SimplexRef{{}, (i + 1) % k}, SimplexRef{{}, i}});
    x.action.assign(2, {});
    for (std::size_t e = 0; e < g->order; ++e) {
        std::vector<int> row(k);
        for (int i = 0; i < k; ++i) row[i] = (i + vertex_shift[e]) % k;
        x.action[0].push_back(row);
        x.action[1].push_back(std::move(row));
    }
    x.group = std::move(g);
    return validated(std::move(x));
}

}  // namespace

SimplicialGSet circle_space(GroupPtr g, int subdivisions, CircleAction a) {
    const int k = subdivisions;
    if (k < 1) throw std::invalid_argument("circle: need at least one subdivision");
    switch (a) {
        case CircleAction::Trivial: {
            std::vector<int> shift(g->order, 0);
            return circle_loop(std::move(g), k, shift);
        }
        case CircleAction::Rotation: {
            const std::size_t m = g->order;
            if (k % static_cast<int>(m) != 0)
                throw std::invalid_argument("circle rotation: |G| must divide the subdivisions");
            // Minimal-index element of full order generates; elements shift by
            // their discrete log times k/|G|.
            int gen = -1;
            for (std::size_t e = 0; e < m && gen < 0; ++e) {
                int p = g->identity;
                std::size_t ord = 0;
                do {
                    p = g->mul(p, static_cast<int>(e));
                    ++ord;
                } while (p != g->identity);
                if (ord == m) gen = static_cast<int>(e);
            }
            if (gen < 0) throw std::invalid_argument("circle rotation: group is not cyclic");
            std::vector<int> shift(m, -1);
            int p = g->identity;
            for (std::size_t a0 = 0; a0 < m; ++a0) {
                shift[p] = static_cast<int>(a0) * (k / static_cast<int>(m));
                p = g->mul(p, gen);
            }
            return circle_loop(std::move(g), k, shift);
        }
        case CircleAction::Antipodal: {
            if (g->order != 2) throw std::invalid_argument("circle antipodal: needs |G| = 2");
            if (k < 4 || k % 2 != 0)
                throw std::invalid_argument("circle antipodal: needs an even count >= 4");
            std::vector<int> shift{0, 0};
            shift[1 - g->identity] = k / 2;
            return circle_loop(std::move(g), k, shift);
        }
        case CircleAction::Reflection: {
            if (g->order != 2) throw std::invalid_argument("circle reflection: needs |G| = 2");
            if (k % 2 != 0)
                throw std::invalid_argument(
                    "circle reflection: needs an even subdivision count");
            // Two arcs from pole v0 to pole v_{k/2}, both oriented away from
            // v0; the reflection swaps the arcs and fixes the poles.
            SimplicialGSet x;
            x.dim = 1;
            x.names.resize(2);
            for (int i = 0; i < k; ++i) x.names[0].push_back("v" + std::to_string(i));
            const int half = k / 2;
            for (int j = 1; j <= half; ++j) x.names[1].push_back("a" + std::to_string(j));
            for (int j = 1; j <= half; ++j) x.names[1].push_back("b" + std::to_string(j));
            x.faces.resize(2);
            for (int j = 1; j <= half; ++j)
                x.faces[1].push_back({SimplexRef{{}, j}, SimplexRef{{}, j - 1}});
            for (int j = 1; j <= half; ++j)
                x.faces[1].push_back(
                    {SimplexRef{{}, k - j}, SimplexRef{{}, (k + 1 - j) % k}});
            int flip = 1 - g->identity;
            x.action.assign(2, {});
            for (std::size_t e = 0; e < 2; ++e) {
                std::vector<int> v(k), ed(k);
                for (int i = 0; i < k; ++i)
                    v[i] = (static_cast<int>(e) == flip) ? (k - i) % k : i;
                for (int i = 0; i < k; ++i)
                    ed[i] = (static_cast<int>(e) == flip) ? (i + half) % k : i;
                x.action[0].push_back(std::move(v));
                x.action[1].push_back(std::move(ed));
            }
            x.group = std::move(g);
            return validated(std::move(x));
        }
    }
    throw std::invalid_argument("circle: unknown action");
}

SimplicialGSet sphere2_space(GroupPtr g, SphereAction a) {
    // Octahedron: vertices 2i, 2i+1 are the poles of axis i; simplices are the
    // sorted tuples with at most one vertex per axis.
    SimplicialGSet x;
    x.dim = 2;
    x.names.resize(3);
    x.faces.resize(3);

    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < 6; ++p)
        for (int q = p + 1; q < 6; ++q)
            if (p / 2 != q / 2) edges.emplace_back(p, q);
    std::vector<std::array<int, 3>> tris;
    for (int p : {0, 1})
        for (int q : {2, 3})
            for (int r : {4, 5}) tris.push_back({p, q, r});
    std::sort(tris.begin(), tris.end());

    auto edge_index = [&](int p, int q) {
        if (p > q) std::swap(p, q);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == std::make_pair(p, q)) return static_cast<int>(i);
        throw std::logic_error("sphere2: missing edge");
    };

    for (int v = 0; v < 6; ++v) x.names[0].push_back("v" + std::to_string(v));
    for (auto [p, q] : edges)
        x.names[1].push_back("e" + std::to_string(p) + std::to_string(q));
    for (auto [p, q, r] : tris)
        x.names[2].push_back("t" + std::to_string(p) + std::to_string(q) + std::to_string(r));

    for (auto [p, q] : edges)
        x.faces[1].push_back({SimplexRef{{}, q}, SimplexRef{{}, p}});
    for (auto [p, q, r] : tris)
        x.faces[2].push_back({SimplexRef{{}, edge_index(q, r)}, SimplexRef{{}, edge_index(p, r)},
                              SimplexRef{{}, edge_index(p, q)}});

    x.action.assign(3, {});
    auto push_action = [&](const std::vector<int>& vperm) {
        std::vector<int> e(edges.size()), t(tris.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
            e[i] = edge_index(vperm[edges[i].first], vperm[edges[i].second]);
        for (std::size_t i = 0; i < tris.size(); ++i) {
            std::array<int, 3> img{vperm[tris[i][0]], vperm[tris[i][1]], vperm[tris[i][2]]};
            std::sort(img.begin(), img.end());
            auto it = std::find(tris.begin(), tris.end(), img);
            t[i] = static_cast<int>(it - tris.begin());
        }
        x.action[0].push_back(vperm);
        x.action[1].push_back(std::move(e));
        x.action[2].push_back(std::move(t));
    };

    if (a == SphereAction::Trivial) {
        std::vector<int> id(6);
        std::iota(id.begin(), id.end(), 0);
        for (std::size_t e = 0; e < g->order; ++e) push_action(id);
    } else {
        if (g->order != 2) throw std::invalid_argument("sphere2 antipodal: needs |G| = 2");
        std::vector<int> id(6), flip{1, 0, 3, 2, 5, 4};
        std::iota(id.begin(), id.end(), 0);
        push_action(g->identity == 0 ? id : flip);
        push_action(g->identity == 0 ? flip : id);
    }
    x.group = std::move(g);
    return validated(std::move(x));
}

SimplicialGSet induced_space(const GSetPtr& s) {
    SimplicialGSet x;
    x.group = s->group;
    x.dim = 0;
    x.names.resize(1);
    for (std::size_t i = 0; i < s->size; ++i) x.names[0].push_back("x" + std::to_string(i));
    x.faces.resize(1);
    x.action = {s->act};
    return validated(std::move(x));
}

namespace {

// Shared cone-over-apex layout: per degree the original simplices first, then
// the coned copies of the previous degree (apex in vertex position 0).
SimplexRef cone_ref(const SimplexRef& f, std::size_t offset) {
    SimplexRef out;
    for (int j : f.word) out.word.push_back(j + 1);
    out.base = static_cast<int>(offset) + f.base;
    return out;
}

}  // namespace

SimplicialGSet cone_space(const SimplicialGSet& x) {
    SimplicialGSet c;
    c.group = x.group;
    c.dim = x.dim + 1;
    c.names.resize(c.dim + 1);
    c.faces.resize(c.dim + 1);
    c.action.assign(c.dim + 1, {});

    for (int n = 0; n <= c.dim; ++n) {
        for (std::size_t s = 0; s < x.count(n); ++s) c.names[n].push_back(x.names[n][s]);
        if (n == 0) c.names[0].push_back("apex");
        for (std::size_t s = 0; n >= 1 && s < x.count(n - 1); ++s)
            c.names[n].push_back("c." + x.names[n - 1][s]);
    }
    const int apex = static_cast<int>(x.count(0));

    for (int n = 1; n <= c.dim; ++n) {
        for (std::size_t s = 0; s < x.count(n); ++s) c.faces[n].push_back(x.faces[n][s]);
        const int m = n - 1;
        for (std::size_t s = 0; s < x.count(m); ++s) {
            std::vector<SimplexRef> fs;
            fs.push_back(SimplexRef{{}, static_cast<int>(s)});
            for (int i = 1; i <= n; ++i) {
                if (m == 0) {
                    fs.push_back(SimplexRef{{}, apex});
                } else {
                    const SimplexRef& f = x.faces[m][s][i - 1];
                    int bd = m - 1 - static_cast<int>(f.word.size());
                    fs.push_back(cone_ref(f, x.count(bd + 1)));
                }
            }
            c.faces[n].push_back(std::move(fs));
        }
    }

    for (int n = 0; n <= c.dim; ++n)
        for (std::size_t g = 0; g < x.group->order; ++g) {
            std::vector<int> row;
            for (std::size_t s = 0; s < x.count(n); ++s) row.push_back(x.action[n][g][s]);
            if (n == 0) row.push_back(apex);
            int offset = static_cast<int>(x.count(n)) + (n == 0 ? 1 : 0);
            for (std::size_t s = 0; n >= 1 && s < x.count(n - 1); ++s)
                row.push_back(offset + x.action[n - 1][g][s]);
            c.action[n].push_back(std::move(row));
        }
    return validated(std::move(c));
}

SimplicialGSet suspension_space(const SimplicialGSet& x) {
    SimplicialGSet c;
    c.group = x.group;
    c.dim = x.dim + 1;
    c.names.resize(c.dim + 1);
    c.faces.resize(c.dim + 1);
    c.action.assign(c.dim + 1, {});

    for (int n = 0; n <= c.dim; ++n) {
        for (std::size_t s = 0; s < x.count(n); ++s) c.names[n].push_back(x.names[n][s]);
        if (n == 0) {
            c.names[0].push_back("north");
            c.names[0].push_back("south");
        }
        for (std::size_t s = 0; n >= 1 && s < x.count(n - 1); ++s)
            c.names[n].push_back("n." + x.names[n - 1][s]);
        for (std::size_t s = 0; n >= 1 && s < x.count(n - 1); ++s)
            c.names[n].push_back("s." + x.names[n - 1][s]);
    }
    const int north = static_cast<int>(x.count(0));
    const int south = north + 1;

    for (int n = 1; n <= c.dim; ++n) {
        for (std::size_t s = 0; s < x.count(n); ++s) c.faces[n].push_back(x.faces[n][s]);
        const int m = n - 1;
        for (int side = 0; side < 2; ++side) {
            const int pole = side == 0 ? north : south;
            for (std::size_t s = 0; s < x.count(m); ++s) {
                std::vector<SimplexRef> fs;
                fs.push_back(SimplexRef{{}, static_cast<int>(s)});
                for (int i = 1; i <= n; ++i) {
                    if (m == 0) {
                        fs.push_back(SimplexRef{{}, pole});
                    } else {
                        const SimplexRef& f = x.faces[m][s][i - 1];
                        int bd = m - 1 - static_cast<int>(f.word.size());
                        std::size_t offset =
                            x.count(bd + 1) + (bd + 1 == 0 ? 2 : 0) +
                            (side == 1 ? x.count(bd) : 0);
                        fs.push_back(cone_ref(f, offset));
                    }
                }
                c.faces[n].push_back(std::move(fs));
            }
        }
    }

    for (int n = 0; n <= c.dim; ++n)
        for (std::size_t g = 0; g < x.group->order; ++g) {
            std::vector<int> row;
            for (std::size_t s = 0; s < x.count(n); ++s) row.push_back(x.action[n][g][s]);
            if (n == 0) {
                row.push_back(north);
                row.push_back(south);
            }
            int offset = static_cast<int>(x.count(n)) + (n == 0 ? 2 : 0);
            for (int side = 0; side < 2; ++side)
                for (std::size_t s = 0; n >= 1 && s < x.count(n - 1); ++s)
                    row.push_back(offset + side * static_cast<int>(x.count(n - 1)) +
                                  x.action[n - 1][g][s]);
            c.action[n].push_back(std::move(row));
        }
    return validated(std::move(c));
}

long euler_characteristic(const SimplicialGSet& x) {
    long chi = 0;
    for (int n = 0; n <= x.dim; ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(x.count(n));
    return chi;
}

}  // namespace eqhom
