#include "eqhom/bredon.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqhom {

std::string variant_name(Variant v) {
    return v == Variant::Normalized ? "normalized" : "unnormalized";
}

namespace {

DegreeData build_degree_data(const SimplicialGSet& x, const CoeffSystem& k, Variant variant,
                             int n) {
    DegreeData dd;
    if (variant == Variant::Normalized) {
        dd.simplices = x.degree_gset(n);
    } else {
        RefSet rs = materialize_degree(x, n);
        dd.simplices = rs.set;
        dd.refs = std::move(rs.refs);
        dd.ref_index = std::move(rs.index);
    }
    dd.eval = evaluate_on_gset(k, dd.simplices);
    return dd;
}

// Face of simplex `s` in degree n as a point of degree n-1, or nullopt when
// the face is degenerate (normalized variant only).
std::optional<int> face_point(const SimplicialGSet& x, Variant variant, const DegreeData& dn,
                              const DegreeData& dprev, int n, int s, int i) {
    if (variant == Variant::Normalized) {
        const SimplexRef& f = x.face(n, s, i);
        if (f.degenerate()) return std::nullopt;
        return f.base;
    }
    SimplexRef f = x.face_of_ref(n, dn.refs[s], i);
    return dprev.ref_index.at(f);
}

AbHom assemble_differential(const SimplicialGSet& x, const CoeffSystem& k, Variant variant,
                            const DegreeData& dn, const DegreeData& dprev, int n) {
    IntMatrix m(dprev.eval.group.gens(), dn.eval.group.gens());
    for (std::size_t oi = 0; oi < dn.eval.dec.orbits.size(); ++oi) {
        const Orbit& o = dn.eval.dec.orbits[oi];
        for (int i = 0; i <= n; ++i) {
            auto fp = face_point(x, variant, dn, dprev, n, o.anchor, i);
            if (!fp) continue;
            Transport t = transport_to(k, dprev.eval, o.class_index, *fp);
            IntMatrix term = t.into_sum.matrix() * dn.eval.projections[oi].matrix();
            m = (i % 2 == 0) ? m + term : m - term;
        }
    }
    return AbHom(dn.eval.group, dprev.eval.group, std::move(m));
}

int pos_in_sorted(const std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x)
        throw std::logic_error("bredon: simplex missing from a fixed-point list");
    return static_cast<int>(it - v.begin());
}

CoendPresentation build_coend_presentation(const SimplicialGSet& x, const CoeffSystem& k,
                                           int degree, Variant variant, const DegreeData& dd) {
    const OrbitCategory& oc = *k.category;
    const std::size_t nobj = oc.object_count();

    CoendPresentation cp;
    cp.degree = degree;
    cp.variant = variant;
    cp.fixed.resize(nobj);
    cp.gen_offset.assign(nobj, 0);

    std::size_t gens = 0;
    for (std::size_t i = 0; i < nobj; ++i) {
        cp.fixed[i] = fixed_points(dd.simplices, oc.cls(i).representative);
        cp.gen_offset[i] = gens;
        gens += cp.fixed[i].size() * k.values[i].gens();
        for (std::size_t s = 0; s < cp.fixed[i].size(); ++s)
            for (std::size_t l = 0; l < k.values[i].gens(); ++l)
                cp.generators.push_back({i, s, l});
    }
    auto gidx = [&](std::size_t i, int pos, std::size_t l) {
        return cp.gen_offset[i] + static_cast<std::size_t>(pos) * k.values[i].gens() + l;
    };

    // Torsion relations per generator pair, then one relation per
    // (morphism, fixed simplex of the target object, source generator):
    // (f^* sigma, kappa) = (sigma, f_* kappa).
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < nobj; ++i)
        for (std::size_t s = 0; s < cp.fixed[i].size(); ++s)
            for (std::size_t l = 0; l < k.values[i].gens(); ++l) {
                Int d = k.values[i].gen_order(l);
                if (d == 0) continue;
                std::vector<Int> row(gens);
                row[gidx(i, static_cast<int>(s), l)] = d;
                rows.push_back(std::move(row));
            }
    for (std::size_t i = 0; i < nobj; ++i)
        for (std::size_t j = 0; j < nobj; ++j)
            for (std::size_t fidx = 0; fidx < oc.homs(i, j).size(); ++fidx) {
                const GMap& f = oc.homs(i, j)[fidx];
                const IntMatrix& fk = k.map(i, j, fidx).matrix();
                int q = f.values[oc.object(i).anchor];
                int rep = oc.object(j).point_rep[q];
                for (int sigma : cp.fixed[j]) {
                    int fstar = dd.simplices->apply(rep, sigma);
                    int fstar_pos = pos_in_sorted(cp.fixed[i], fstar);
                    int sigma_pos = pos_in_sorted(cp.fixed[j], sigma);
                    for (std::size_t l = 0; l < k.values[i].gens(); ++l) {
                        std::vector<Int> row(gens);
                        row[gidx(i, fstar_pos, l)] += 1;
                        for (std::size_t mrow = 0; mrow < k.values[j].gens(); ++mrow)
                            row[gidx(j, sigma_pos, mrow)] -= fk.at(mrow, l);
                        rows.push_back(std::move(row));
                    }
                }
            }

    cp.relations = IntMatrix(rows.size(), gens);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < gens; ++c) cp.relations.at(r, c) = rows[r][c];
    cp.quotient = group_from_presentation(cp.relations, gens);

    // Comparison with the cellular group: a generator (G/H, sigma, kappa) maps
    // to kappa pushed into the summand of sigma's orbit.
    IntMatrix to_cell(dd.eval.group.gens(), gens);
    for (std::size_t i = 0; i < nobj; ++i)
        for (std::size_t s = 0; s < cp.fixed[i].size(); ++s) {
            Transport t = transport_to(k, dd.eval, i, cp.fixed[i][s]);
            for (std::size_t l = 0; l < k.values[i].gens(); ++l) {
                std::size_t col = gidx(i, static_cast<int>(s), l);
                for (std::size_t r = 0; r < dd.eval.group.gens(); ++r)
                    to_cell.at(r, col) = t.into_sum.matrix().at(r, l);
            }
        }
    cp.to_cellular = hom_from_presentation_gens(cp.quotient, dd.eval.group, to_cell);

    // Inverse direction: the summand of an orbit lands on the generator at the
    // orbit's anchored simplex.
    IntMatrix embed(gens, dd.eval.group.gens());
    for (std::size_t oi = 0; oi < dd.eval.dec.orbits.size(); ++oi) {
        const Orbit& o = dd.eval.dec.orbits[oi];
        int pos = pos_in_sorted(cp.fixed[o.class_index], o.anchor);
        const IntMatrix& proj = dd.eval.projections[oi].matrix();
        for (std::size_t l = 0; l < k.values[o.class_index].gens(); ++l) {
            std::size_t row = gidx(o.class_index, pos, l);
            for (std::size_t c = 0; c < proj.cols(); ++c)
                embed.at(row, c) += proj.at(l, c);
        }
    }
    cp.from_cellular = AbHom(dd.eval.group, cp.quotient, cp.quotient.to_canonical() * embed);
    return cp;
}

}  // namespace

BredonComplex cellular_chain_complex(const SimplicialGSet& x, const CoeffSystem& k,
                                     Variant variant, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("cellular_chain_complex: negative degree");
    BredonComplex bc;
    bc.variant = variant;
    const int top = max_degree + 1;
    for (int n = 0; n <= top; ++n) bc.degrees.push_back(build_degree_data(x, k, variant, n));

    std::vector<FgAbGroup> groups;
    std::vector<AbHom> diffs;
    for (int n = 0; n <= top; ++n) groups.push_back(bc.degrees[n].eval.group);
    for (int n = 1; n <= top; ++n)
        diffs.push_back(assemble_differential(x, k, variant, bc.degrees[n], bc.degrees[n - 1], n));
    bc.complex = ChainComplex(std::move(groups), std::move(diffs));
    return bc;
}

CoendPresentation coequalizer_coend(const SimplicialGSet& x, const CoeffSystem& k, int degree,
                                    Variant variant) {
    DegreeData dd = build_degree_data(x, k, variant, degree);
    return build_coend_presentation(x, k, degree, variant, dd);
}

CoendComplex coend_complex(const SimplicialGSet& x, const CoeffSystem& k, int max_degree,
                           Variant variant) {
    CoendComplex cc;
    cc.variant = variant;
    const int top = max_degree + 1;

    std::vector<DegreeData> dds;
    for (int n = 0; n <= top; ++n) dds.push_back(build_degree_data(x, k, variant, n));
    for (int n = 0; n <= top; ++n)
        cc.degrees.push_back(build_coend_presentation(x, k, n, variant, dds[n]));

    for (int n = 0; n <= top; ++n) {
        const CoendPresentation& cp = cc.degrees[n];
        if (!hom_compose(cp.to_cellular, cp.from_cellular).is_identity() ||
            !hom_compose(cp.from_cellular, cp.to_cellular).is_identity())
            cc.comparisons_ok = false;
    }

    // Differential on presentation generators: alternating faces inside each
    // fixed-point simplicial set.
    std::vector<FgAbGroup> groups;
    std::vector<AbHom> diffs;
    for (int n = 0; n <= top; ++n) groups.push_back(cc.degrees[n].quotient);
    for (int n = 1; n <= top; ++n) {
        const CoendPresentation& cur = cc.degrees[n];
        const CoendPresentation& prev = cc.degrees[n - 1];
        IntMatrix p(prev.quotient.gens(), cur.generators.size());
        for (std::size_t col = 0; col < cur.generators.size(); ++col) {
            const CoendGenerator& g = cur.generators[col];
            int sigma = cur.fixed[g.object][g.simplex];
            for (int i = 0; i <= n; ++i) {
                std::optional<int> fp;
                if (variant == Variant::Normalized) {
                    const SimplexRef& f = x.face(n, sigma, i);
                    if (!f.degenerate()) fp = f.base;
                } else {
                    fp = dds[n - 1].ref_index.at(x.face_of_ref(n, dds[n].refs[sigma], i));
                }
                if (!fp) continue;
                int pos = pos_in_sorted(prev.fixed[g.object], *fp);
                std::size_t prow = prev.gen_offset[g.object] +
                                   static_cast<std::size_t>(pos) * k.values[g.object].gens() +
                                   g.gen;
                for (std::size_t r = 0; r < prev.quotient.gens(); ++r) {
                    const Int& v = prev.quotient.to_canonical().at(r, prow);
                    p.at(r, col) += (i % 2 == 0) ? v : -v;
                }
            }
        }
        diffs.push_back(hom_from_presentation_gens(cur.quotient, prev.quotient, p));
    }
    cc.complex = ChainComplex(std::move(groups), std::move(diffs));
    return cc;
}

std::vector<FgAbGroup> coend_homology(const SimplicialGSet& x, const CoeffSystem& k,
                                      int max_degree, Variant variant) {
    return homology_list(coend_complex(x, k, max_degree, variant).complex, max_degree);
}

std::vector<FgAbGroup> homology_list(const ChainComplex& c, int max_degree) {
    std::vector<FgAbGroup> out;
    for (int n = 0; n <= max_degree; ++n) out.push_back(homology_at(c, n));
    return out;
}

QuotientPipeline quotient_pipeline(const SimplicialGSet& x, const CoeffSystem& constant_k,
                                   Variant variant, int max_degree) {
    if (constant_k.kind != CoeffSystem::Kind::Constant)
        throw std::invalid_argument("quotient_pipeline: needs a constant coefficient system");
    const FgAbGroup& a = *constant_k.constant_value;

    QuotientPipeline qp;
    qp.cellular = cellular_chain_complex(x, constant_k, variant, max_degree);

    QuotientSSet y = quotient_sset(x);
    CoeffSystem ky = constant_system(a, orbit_category(y.sset.group));
    qp.quotient = cellular_chain_complex(y.sset, ky, variant, max_degree);

    const int top = max_degree + 1;
    for (int n = 0; n <= top; ++n) {
        const DegreeData& dc = qp.cellular.degrees[n];
        const DegreeData& dq = qp.quotient.degrees[n];

        // Orbits of X_n correspond to simplices of (X/G)_n: map each orbit to
        // the quotient point of its basepoint.
        std::vector<std::size_t> ypoint_of_orbit(dc.eval.dec.orbits.size());
        for (std::size_t oi = 0; oi < dc.eval.dec.orbits.size(); ++oi) {
            int b = dc.eval.dec.orbits[oi].basepoint;
            if (variant == Variant::Normalized) {
                ypoint_of_orbit[oi] = y.projection[n][b];
            } else {
                const SimplexRef& r = dc.refs[b];
                int bd = n - static_cast<int>(r.word.size());
                SimplexRef yr{r.word, static_cast<int>(y.projection[bd][r.base])};
                ypoint_of_orbit[oi] = static_cast<std::size_t>(dq.ref_index.at(yr));
            }
        }

        IntMatrix qm(dq.eval.group.gens(), dc.eval.group.gens());
        for (std::size_t oi = 0; oi < ypoint_of_orbit.size(); ++oi) {
            std::size_t t = ypoint_of_orbit[oi];
            // Over the trivial group each point is its own orbit, in order.
            qm = qm + dq.eval.inclusions[t].matrix() * dc.eval.projections[oi].matrix();
        }
        qp.q.emplace_back(dc.eval.group, dq.eval.group, std::move(qm));

        // p: one pullback per quotient simplex; its total space is the orbit,
        // included back into the cellular sum.
        std::vector<std::size_t> orbit_of_ypoint(ypoint_of_orbit.size(), 0);
        for (std::size_t oi = 0; oi < ypoint_of_orbit.size(); ++oi)
            orbit_of_ypoint[ypoint_of_orbit[oi]] = oi;

        IntMatrix pm(dc.eval.group.gens(), dq.eval.group.gens());
        for (std::size_t t = 0; t < orbit_of_ypoint.size(); ++t) {
            Pullback pb = pullback({orbit_of_ypoint[t]}, dc.simplices, dc.eval.dec.orbit_of,
                                   dc.eval.dec.orbits.size());
            EvaluatedGSet ep = evaluate_on_gset(constant_k, pb.set);
            AbHom into = evaluate_on_gmap(constant_k, pb.projection, ep, dc.eval);
            pm = pm + into.matrix() * ep.inclusions[0].matrix() * dq.eval.projections[t].matrix();
        }
        qp.p.emplace_back(dq.eval.group, dc.eval.group, std::move(pm));

        if (!hom_compose(qp.q[n], qp.p[n]).is_identity() ||
            !hom_compose(qp.p[n], qp.q[n]).is_identity())
            qp.inverses_ok = false;
    }

    for (int n = 1; n <= top; ++n)
        if (hom_compose(qp.q[n - 1], qp.cellular.complex.differential(n)) !=
            hom_compose(qp.quotient.complex.differential(n), qp.q[n]))
            qp.chain_map_ok = false;
    return qp;
}

FixedPointPipeline fixed_point_pipeline(const SimplicialGSet& x, const CoeffSystem& mtr_k,
                                        Variant variant, int max_degree) {
    if (mtr_k.kind != CoeffSystem::Kind::FixedPoint)
        throw std::invalid_argument("fixed_point_pipeline: needs a fixed-point system");
    const GModule& m = *mtr_k.module;
    const FgAbGroup& M = m.underlying;
    const IntMatrix relM = M.relation_matrix();
    const OrbitCategory& oc = *mtr_k.category;

    FixedPointPipeline fp;
    fp.cellular = cellular_chain_complex(x, mtr_k, variant, max_degree);

    const int top = max_degree + 1;
    std::vector<FgAbGroup> fgroups;
    std::vector<AbHom> fincl;          // F_n -> ambient_n
    std::vector<DirectSum> ambients;

    for (int n = 0; n <= top; ++n) {
        const DegreeData& dd = fp.cellular.degrees[n];
        const std::size_t cnt = dd.simplices->size;
        DirectSum amb = group_direct_sum(std::vector<FgAbGroup>(cnt, M));

        // Joint kernel of (rho(g) - id) over all non-identity g.
        IntMatrix stacked(0, amb.group.gens());
        IntMatrix relblock(0, 0);
        const IntMatrix relAmb = amb.group.relation_matrix();
        for (std::size_t g = 0; g < x.group->order; ++g) {
            if (static_cast<int>(g) == x.group->identity) continue;
            IntMatrix rho(amb.group.gens(), amb.group.gens());
            for (std::size_t s = 0; s < cnt; ++s) {
                int gs = dd.simplices->apply(static_cast<int>(g), static_cast<int>(s));
                rho = rho + amb.inclusions[gs].matrix() * m.action[g].matrix() *
                                amb.projections[s].matrix();
            }
            IntMatrix block = rho - IntMatrix::identity(amb.group.gens());
            IntMatrix pad_old(block.rows(), relblock.cols());
            IntMatrix pad_new(stacked.rows(), relAmb.cols());
            stacked = vstack(stacked, block);
            relblock = vstack(hstack(relblock, pad_new), hstack(pad_old, relAmb));
        }
        IntMatrix ker = kernel_lattice(hstack(stacked, relblock));
        IntMatrix lattice(amb.group.gens(), ker.cols());
        for (std::size_t r = 0; r < lattice.rows(); ++r)
            for (std::size_t c = 0; c < lattice.cols(); ++c) lattice.at(r, c) = ker.at(r, c);

        auto coords = solve_matrix(lattice, relAmb);
        if (!coords) throw std::logic_error("fixed_point_pipeline: relations escape the lattice");
        FgAbGroup fn = group_from_presentation(coords->transpose(), lattice.cols());
        fincl.emplace_back(fn, amb.group, lattice * fn.from_canonical());
        fgroups.push_back(std::move(fn));
        ambients.push_back(std::move(amb));
        fp.ambient.push_back(ambients.back().group);
    }

    // Ambient differential restricted to the fixed subgroups.
    std::vector<AbHom> fdiffs;
    for (int n = 1; n <= top; ++n) {
        const DegreeData& dn = fp.cellular.degrees[n];
        const DegreeData& dprev = fp.cellular.degrees[n - 1];
        const DirectSum& an = ambients[n];
        const DirectSum& aprev = ambients[n - 1];

        IntMatrix boundary(aprev.group.gens(), an.group.gens());
        for (std::size_t s = 0; s < dn.simplices->size; ++s)
            for (int i = 0; i <= n; ++i) {
                auto fpt = face_point(x, variant, dn, dprev, n, static_cast<int>(s), i);
                if (!fpt) continue;
                IntMatrix term = aprev.inclusions[*fpt].matrix() * an.projections[s].matrix();
                boundary = (i % 2 == 0) ? boundary + term : boundary - term;
            }

        IntMatrix rhs = boundary * fincl[n].matrix();
        auto sol = solve_matrix(hstack(fincl[n - 1].matrix(),
                                       aprev.group.relation_matrix()),
                                rhs);
        if (!sol) throw std::logic_error("fixed_point_pipeline: boundary leaves the fixed part");
        IntMatrix r(fgroups[n - 1].gens(), fgroups[n].gens());
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) = sol->at(i, j);
        fdiffs.emplace_back(fgroups[n], fgroups[n - 1], std::move(r));
    }
    fp.complex = ChainComplex(fgroups, std::move(fdiffs));

    // f evaluates an invariant vector at each orbit's anchored simplex and
    // rewrites it in M^H coordinates; h spreads a fixed element over the
    // orbit, twisting by the module action of each coset representative.
    for (int n = 0; n <= top; ++n) {
        const DegreeData& dd = fp.cellular.degrees[n];
        const DirectSum& amb = ambients[n];

        IntMatrix fm(dd.eval.group.gens(), fgroups[n].gens());
        IntMatrix hm(fgroups[n].gens(), dd.eval.group.gens());
        for (std::size_t oi = 0; oi < dd.eval.dec.orbits.size(); ++oi) {
            const Orbit& o = dd.eval.dec.orbits[oi];
            const AbHom& value_incl = mtr_k.value_inclusions[o.class_index];

            IntMatrix at_anchor = amb.projections[o.anchor].matrix() * fincl[n].matrix();
            auto coords = solve_matrix(hstack(value_incl.matrix(), relM), at_anchor);
            if (!coords)
                throw std::logic_error("fixed_point_pipeline: anchor value not H-fixed");
            IntMatrix comp(mtr_k.values[o.class_index].gens(), fgroups[n].gens());
            for (std::size_t i = 0; i < comp.rows(); ++i)
                for (std::size_t j = 0; j < comp.cols(); ++j) comp.at(i, j) = coords->at(i, j);
            fm = fm + dd.eval.inclusions[oi].matrix() * comp;

            const CosetSpace& obj = oc.object(o.class_index);
            IntMatrix spread(amb.group.gens(), mtr_k.values[o.class_index].gens());
            for (std::size_t u = 0; u < obj.set->size; ++u) {
                int point = o.identification.values[u];
                spread = spread + amb.inclusions[point].matrix() *
                                      m.action[obj.point_rep[u]].matrix() * value_incl.matrix();
            }
            auto hcoords = solve_matrix(
                hstack(fincl[n].matrix(), amb.group.relation_matrix()), spread);
            if (!hcoords)
                throw std::logic_error("fixed_point_pipeline: spread vector not invariant");
            IntMatrix hcomp(fgroups[n].gens(), mtr_k.values[o.class_index].gens());
            for (std::size_t i = 0; i < hcomp.rows(); ++i)
                for (std::size_t j = 0; j < hcomp.cols(); ++j) hcomp.at(i, j) = hcoords->at(i, j);
            hm = hm + hcomp * dd.eval.projections[oi].matrix();
        }
        fp.f.emplace_back(fgroups[n], dd.eval.group, std::move(fm));
        fp.h.emplace_back(dd.eval.group, fgroups[n], std::move(hm));

        if (!hom_compose(fp.f[n], fp.h[n]).is_identity() ||
            !hom_compose(fp.h[n], fp.f[n]).is_identity())
            fp.inverses_ok = false;
    }

    for (int n = 1; n <= top; ++n)
        if (hom_compose(fp.f[n - 1], fp.complex.differential(n)) !=
            hom_compose(fp.cellular.complex.differential(n), fp.f[n]))
            fp.chain_map_ok = false;
    return fp;
}

TheoremReport verify_theorem(const SimplicialGSet& x, const CoeffSystem& k, int max_degree) {
    TheoremReport rep;
    rep.max_degree = max_degree;

    for (Variant v : {Variant::Normalized, Variant::Unnormalized}) {
        BredonComplex cell = cellular_chain_complex(x, k, v, max_degree);
        rep.runs.push_back({"cellular:" + variant_name(v),
                            homology_list(cell.complex, max_degree)});
        CoendComplex coe = coend_complex(x, k, max_degree, v);
        rep.runs.push_back({"coend:" + variant_name(v),
                            homology_list(coe.complex, max_degree)});
        if (!coe.comparisons_ok) {
            rep.failures.push_back("coend:" + variant_name(v) +
                                   ": comparison with the cellular group is not an isomorphism");
        }
        if (k.kind == CoeffSystem::Kind::Constant) {
            QuotientPipeline qp = quotient_pipeline(x, k, v, max_degree);
            rep.runs.push_back({"quotient:" + variant_name(v),
                                homology_list(qp.quotient.complex, max_degree)});
            if (!qp.inverses_ok)
                rep.failures.push_back("quotient:" + variant_name(v) +
                                       ": q and p are not mutually inverse");
            if (!qp.chain_map_ok)
                rep.failures.push_back("quotient:" + variant_name(v) + ": q is not a chain map");
        }
        if (k.kind == CoeffSystem::Kind::FixedPoint) {
            FixedPointPipeline pp = fixed_point_pipeline(x, k, v, max_degree);
            rep.runs.push_back({"fixedpoint:" + variant_name(v),
                                homology_list(pp.complex, max_degree)});
            if (!pp.inverses_ok)
                rep.failures.push_back("fixedpoint:" + variant_name(v) +
                                       ": f and h are not mutually inverse");
            if (!pp.chain_map_ok)
                rep.failures.push_back("fixedpoint:" + variant_name(v) +
                                       ": f is not a chain map");
        }
    }

    for (int n = 0; n <= max_degree; ++n)
        for (std::size_t i = 0; i < rep.runs.size(); ++i)
            for (std::size_t j = i + 1; j < rep.runs.size(); ++j)
                if (rep.runs[i].homology[n] != rep.runs[j].homology[n])
                    rep.failures.push_back(
                        "degree " + std::to_string(n) + ": " + rep.runs[i].name + " gives " +
                        rep.runs[i].homology[n].to_string() + " but " + rep.runs[j].name +
                        " gives " + rep.runs[j].homology[n].to_string());

    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace eqhom
