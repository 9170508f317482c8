#include "eqhom/coeff.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eqhom {

GModule make_gmodule(GroupPtr group, FgAbGroup underlying, std::vector<AbHom> action) {
    if (action.size() != group->order)
        throw std::invalid_argument("gmodule: one action hom per group element");
    for (const AbHom& h : action)
        if (h.source() != underlying || h.target() != underlying)
            throw std::invalid_argument("gmodule: action homs must be endomorphisms");
    if (!action[group->identity].is_identity())
        throw std::invalid_argument("gmodule: identity must act as the identity");
    for (std::size_t g = 0; g < group->order; ++g)
        for (std::size_t h = 0; h < group->order; ++h)
            if (hom_compose(action[g], action[h]) != action[group->table[g][h]])
                throw std::invalid_argument("gmodule: action not multiplicative at (" +
                                            std::to_string(g) + "," + std::to_string(h) + ")");
    // Multiplicativity plus group inverses make every action hom invertible.
    return GModule{std::move(group), std::move(underlying), std::move(action)};
}

GModule trivial_gmodule(GroupPtr group, FgAbGroup underlying) {
    std::vector<AbHom> action(group->order, AbHom::identity(underlying));
    return make_gmodule(std::move(group), std::move(underlying), std::move(action));
}

CoeffSystem constant_system(const FgAbGroup& a, OrbitCategoryPtr cat) {
    CoeffSystem k;
    k.category = std::move(cat);
    k.kind = CoeffSystem::Kind::Constant;
    k.constant_value = a;
    const std::size_t n = k.category->object_count();
    k.values.assign(n, a);
    k.maps.assign(n, std::vector<std::vector<AbHom>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            k.maps[i][j].assign(k.category->homs(i, j).size(), AbHom::identity(a));
    verify_functoriality(k);
    return k;
}

CoeffSystem fixed_point_system(const GModule& m, OrbitCategoryPtr cat) {
    if (m.group != cat->group())
        throw std::invalid_argument("fixed_point_system: module over a different group");
    CoeffSystem k;
    k.category = std::move(cat);
    k.kind = CoeffSystem::Kind::FixedPoint;
    k.module = m;

    const OrbitCategory& oc = *k.category;
    const FgAbGroup& M = m.underlying;
    const IntMatrix idm = IntMatrix::identity(M.gens());
    const IntMatrix relM = M.relation_matrix();
    const std::size_t n = oc.object_count();

    // Value at G/H: the joint kernel of (action(h) - id) over h in H, as a
    // subgroup of M with its inclusion recorded.
    for (std::size_t i = 0; i < n; ++i) {
        const Subgroup& h = oc.cls(i).representative;
        IntMatrix stacked(0, M.gens());
        IntMatrix relblock(0, 0);
        for (int e : h.elements) {
            if (e == m.group->identity) continue;
            IntMatrix block = m.action[e].matrix() - idm;
            IntMatrix pad_old(block.rows(), relblock.cols());
            IntMatrix pad_new(stacked.rows(), relM.cols());
            stacked = vstack(stacked, block);
            relblock = vstack(hstack(relblock, pad_new), hstack(pad_old, relM));
        }
        IntMatrix ker = kernel_lattice(hstack(stacked, relblock));
        IntMatrix lattice(M.gens(), ker.cols());
        for (std::size_t r = 0; r < lattice.rows(); ++r)
            for (std::size_t c = 0; c < lattice.cols(); ++c) lattice.at(r, c) = ker.at(r, c);

        auto coords = solve_matrix(lattice, relM);
        if (!coords) throw std::logic_error("fixed_point_system: relations escape the lattice");
        FgAbGroup value = group_from_presentation(coords->transpose(), lattice.cols());
        k.value_inclusions.emplace_back(value, M, lattice * value.from_canonical());
        k.values.push_back(std::move(value));
    }

    // Transfer along f: G/H -> G/K sums the translates over the fiber of the
    // target anchor.
    k.maps.assign(n, std::vector<std::vector<AbHom>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const CosetSpace& src = oc.object(i);
        for (std::size_t j = 0; j < n; ++j) {
            const CosetSpace& dst = oc.object(j);
            for (const GMap& f : oc.homs(i, j)) {
                IntMatrix y(M.gens(), k.values[i].gens());
                for (std::size_t s = 0; s < src.set->size; ++s) {
                    if (f.values[s] != dst.anchor) continue;
                    y = y + m.action[src.point_rep[s]].matrix() * k.value_inclusions[i].matrix();
                }
                IntMatrix sys = hstack(k.value_inclusions[j].matrix(), relM);
                auto sol = solve_matrix(sys, y);
                if (!sol)
                    throw std::logic_error("fixed_point_system: transfer misses the fixed group");
                IntMatrix t(k.values[j].gens(), k.values[i].gens());
                for (std::size_t r = 0; r < t.rows(); ++r)
                    for (std::size_t c = 0; c < t.cols(); ++c) t.at(r, c) = sol->at(r, c);
                k.maps[i][j].emplace_back(k.values[i], k.values[j], std::move(t));
            }
        }
    }
    verify_functoriality(k);
    return k;
}

CoeffSystem explicit_system(std::vector<FgAbGroup> values,
                            const std::vector<ExplicitMapSpec>& generators,
                            OrbitCategoryPtr cat) {
    const OrbitCategory& oc = *cat;
    const std::size_t n = oc.object_count();
    if (values.size() != n)
        throw std::invalid_argument("explicit_system: need one value per orbit class");

    CoeffSystem k;
    k.category = cat;
    k.kind = CoeffSystem::Kind::Explicit;
    k.values = std::move(values);
    k.maps.assign(n, std::vector<std::vector<AbHom>>(n));

    std::vector<std::vector<std::vector<std::optional<AbHom>>>> known(
        n, std::vector<std::vector<std::optional<AbHom>>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            known[i][j].assign(oc.homs(i, j).size(), std::nullopt);
    for (std::size_t i = 0; i < n; ++i)
        known[i][i][oc.identity_index(i)] = AbHom::identity(k.values[i]);

    auto pair_name = [&](std::size_t i, std::size_t j, std::size_t f, std::size_t jj,
                         std::size_t kk, std::size_t g) {
        return "hom#" + std::to_string(f) + " (object " + std::to_string(i) + " -> " +
               std::to_string(j) + ") followed by hom#" + std::to_string(g) + " (object " +
               std::to_string(jj) + " -> " + std::to_string(kk) + ")";
    };

    for (const ExplicitMapSpec& spec : generators) {
        if (spec.source_object >= n || spec.target_object >= n ||
            spec.hom_index >= oc.homs(spec.source_object, spec.target_object).size())
            throw std::invalid_argument("explicit_system: morphism reference out of range");
        AbHom h(k.values[spec.source_object], k.values[spec.target_object], spec.matrix);
        auto& slot = known[spec.source_object][spec.target_object][spec.hom_index];
        if (slot && *slot != h)
            throw std::invalid_argument("explicit_system: conflicting data for morphism hom#" +
                                        std::to_string(spec.hom_index));
        slot = std::move(h);
    }

    // Close under composition; disagreement on an already-known composite is
    // a functoriality violation of the given data.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t f = 0; f < known[i][j].size(); ++f) {
                    if (!known[i][j][f]) continue;
                    for (std::size_t kk = 0; kk < n; ++kk)
                        for (std::size_t g = 0; g < known[j][kk].size(); ++g) {
                            if (!known[j][kk][g]) continue;
                            std::size_t c = oc.compose_index(i, j, kk, f, g);
                            AbHom cand = hom_compose(*known[j][kk][g], *known[i][j][f]);
                            if (!known[i][kk][c]) {
                                known[i][kk][c] = std::move(cand);
                                changed = true;
                            } else if (*known[i][kk][c] != cand) {
                                throw std::invalid_argument(
                                    "explicit_system: functoriality violation at " +
                                    pair_name(i, j, f, j, kk, g));
                            }
                        }
                }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t f = 0; f < known[i][j].size(); ++f) {
                if (!known[i][j][f])
                    throw std::invalid_argument("explicit_system: hom#" + std::to_string(f) +
                                                " (object " + std::to_string(i) + " -> " +
                                                std::to_string(j) +
                                                ") is not generated by the given maps");
                k.maps[i][j].push_back(std::move(*known[i][j][f]));
            }

    verify_functoriality(k);
    return k;
}

void verify_functoriality(const CoeffSystem& k) {
    const OrbitCategory& oc = *k.category;
    const std::size_t n = oc.object_count();
    for (std::size_t i = 0; i < n; ++i)
        if (!k.maps[i][i][oc.identity_index(i)].is_identity())
            throw std::invalid_argument("coefficient system: identity of object " +
                                        std::to_string(i) + " is not the identity hom");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t f = 0; f < oc.homs(i, j).size(); ++f)
                for (std::size_t kk = 0; kk < n; ++kk)
                    for (std::size_t g = 0; g < oc.homs(j, kk).size(); ++g) {
                        std::size_t c = oc.compose_index(i, j, kk, f, g);
                        if (hom_compose(k.map(j, kk, g), k.map(i, j, f)) != k.map(i, kk, c))
                            throw std::invalid_argument(
                                "coefficient system: functoriality fails composing hom#" +
                                std::to_string(f) + " (" + std::to_string(i) + "->" +
                                std::to_string(j) + ") with hom#" + std::to_string(g) + " (" +
                                std::to_string(j) + "->" + std::to_string(kk) + ")");
                    }
}

EvaluatedGSet evaluate_on_gset(const CoeffSystem& k, const GSetPtr& s) {
    EvaluatedGSet e;
    e.dec = orbits(s, *k.category);
    std::vector<FgAbGroup> parts;
    for (const Orbit& o : e.dec.orbits) parts.push_back(k.values[o.class_index]);
    DirectSum ds = group_direct_sum(parts);
    e.group = std::move(ds.group);
    e.inclusions = std::move(ds.inclusions);
    e.projections = std::move(ds.projections);
    return e;
}

Transport transport_to(const CoeffSystem& k, const EvaluatedGSet& target_eval,
                       std::size_t source_class, int target_point) {
    const OrbitCategory& oc = *k.category;
    Transport t;
    t.orbit = target_eval.dec.orbit_of[target_point];
    const Orbit& o = target_eval.dec.orbits[t.orbit];

    int q = -1;
    for (std::size_t u = 0; u < o.identification.values.size(); ++u)
        if (o.identification.values[u] == target_point) {
            q = static_cast<int>(u);
            break;
        }
    if (q < 0) throw std::logic_error("transport_to: point not on its own orbit");

    const CosetSpace& src = oc.object(source_class);
    const CosetSpace& dst = oc.object(o.class_index);
    std::vector<int> values(src.set->size);
    for (std::size_t u = 0; u < src.set->size; ++u)
        values[u] = dst.set->apply(src.point_rep[u], q);
    t.hom_index = oc.find_hom(source_class, o.class_index, values);
    t.into_sum = hom_compose(target_eval.inclusions[t.orbit],
                             k.map(source_class, o.class_index, t.hom_index));
    return t;
}

AbHom evaluate_on_gmap(const CoeffSystem& k, const GMap& f, const EvaluatedGSet& source_eval,
                       const EvaluatedGSet& target_eval) {
    IntMatrix m(target_eval.group.gens(), source_eval.group.gens());
    for (std::size_t oi = 0; oi < source_eval.dec.orbits.size(); ++oi) {
        const Orbit& o = source_eval.dec.orbits[oi];
        Transport t = transport_to(k, target_eval, o.class_index, f.values[o.anchor]);
        m = m + t.into_sum.matrix() * source_eval.projections[oi].matrix();
    }
    return AbHom(source_eval.group, target_eval.group, std::move(m));
}

}  // namespace eqhom
