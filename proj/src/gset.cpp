#include "eqhom/gset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqhom {

GSetPtr make_gset(GroupPtr group, std::size_t size, std::vector<std::vector<int>> act) {
    if (act.size() != group->order) throw std::invalid_argument("gset: one row per element");
    for (const auto& row : act) {
        if (row.size() != size) throw std::invalid_argument("gset: row size mismatch");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= size)
                throw std::invalid_argument("gset: point out of range");
    }
    for (std::size_t x = 0; x < size; ++x)
        if (act[group->identity][x] != static_cast<int>(x))
            throw std::invalid_argument("gset: identity must act trivially");
    for (std::size_t g = 0; g < group->order; ++g)
        for (std::size_t h = 0; h < group->order; ++h)
            for (std::size_t x = 0; x < size; ++x)
                if (act[g][act[h][x]] != act[group->table[g][h]][x])
                    throw std::invalid_argument("gset: action not compatible with composition");
    auto s = std::make_shared<GSet>();
    s->group = std::move(group);
    s->size = size;
    s->act = std::move(act);
    return s;
}

GSetPtr trivial_gset(GroupPtr group, std::size_t size) {
    std::vector<int> id(size);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> act(group->order, id);
    return make_gset(std::move(group), size, std::move(act));
}

GSetPtr regular_gset(GroupPtr group) {
    std::vector<std::vector<int>> act = group->table;
    std::size_t n = group->order;
    return make_gset(std::move(group), n, std::move(act));
}

GMap::GMap(GSetPtr source_, GSetPtr target_, std::vector<int> values_)
    : source(std::move(source_)), target(std::move(target_)), values(std::move(values_)) {
    if (values.size() != source->size) throw std::invalid_argument("gmap: size mismatch");
    for (int v : values)
        if (v < 0 || static_cast<std::size_t>(v) >= target->size)
            throw std::invalid_argument("gmap: value out of range");
    const FiniteGroup& grp = *source->group;
    for (std::size_t g = 0; g < grp.order; ++g)
        for (std::size_t x = 0; x < source->size; ++x)
            if (values[source->apply(static_cast<int>(g), static_cast<int>(x))] !=
                target->apply(static_cast<int>(g), values[x]))
                throw std::invalid_argument("gmap: not equivariant");
}

GMap gmap_compose(const GMap& g, const GMap& f) {
    if (f.target->size != g.source->size) throw std::invalid_argument("gmap_compose: mismatch");
    std::vector<int> v(f.values.size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = g.values[f.values[x]];
    return GMap(f.source, g.target, std::move(v));
}

GMap gmap_identity(const GSetPtr& s) {
    std::vector<int> v(s->size);
    std::iota(v.begin(), v.end(), 0);
    return GMap(s, s, std::move(v));
}

CosetSpace coset_space(const Subgroup& h) {
    const GroupPtr& g = h.parent;
    const std::size_t n = g->order;
    std::vector<int> elem_coset(n, -1);
    std::vector<int> point_rep;
    for (std::size_t x = 0; x < n; ++x) {
        if (elem_coset[x] >= 0) continue;
        int p = static_cast<int>(point_rep.size());
        point_rep.push_back(static_cast<int>(x));
        for (int e : h.elements) elem_coset[g->mul(static_cast<int>(x), e)] = p;
    }
    const std::size_t m = point_rep.size();
    std::vector<std::vector<int>> act(n, std::vector<int>(m));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t p = 0; p < m; ++p)
            act[a][p] = elem_coset[g->mul(static_cast<int>(a), point_rep[p])];
    CosetSpace cs;
    cs.set = make_gset(g, m, std::move(act));
    cs.subgroup = h;
    cs.point_rep = std::move(point_rep);
    cs.anchor = elem_coset[g->identity];
    cs.elem_coset = std::move(elem_coset);
    return cs;
}

Subgroup stabilizer(const GSetPtr& s, int x) {
    std::vector<int> elems;
    for (std::size_t g = 0; g < s->group->order; ++g)
        if (s->apply(static_cast<int>(g), x) == x) elems.push_back(static_cast<int>(g));
    return Subgroup{s->group, std::move(elems)};
}

std::vector<int> fixed_points(const GSetPtr& s, const Subgroup& h) {
    std::vector<int> out;
    for (std::size_t x = 0; x < s->size; ++x) {
        bool fixed = true;
        for (int e : h.elements)
            if (s->apply(e, static_cast<int>(x)) != static_cast<int>(x)) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(static_cast<int>(x));
    }
    return out;
}

OrbitCategory::OrbitCategory(GroupPtr group) : group_(std::move(group)) {
    classes_ = conjugacy_classes_of_subgroups(group_);
    for (const SubgroupClass& c : classes_) objects_.push_back(coset_space(c.representative));

    const std::size_t n = objects_.size();
    homs_.assign(n, std::vector<std::vector<GMap>>(n));
    hom_lookup_.assign(n, std::vector<std::map<std::vector<int>, std::size_t>>(n));
    identity_index_.assign(n, 0);

    // Hom(G/H, G/K): one map per coset gK with g^-1 H g <= K, sending the
    // anchor coset to gK.
    for (std::size_t i = 0; i < n; ++i) {
        const CosetSpace& src = objects_[i];
        const Subgroup& h = classes_[i].representative;
        for (std::size_t j = 0; j < n; ++j) {
            const CosetSpace& dst = objects_[j];
            const Subgroup& k = classes_[j].representative;
            for (std::size_t q = 0; q < dst.set->size; ++q) {
                int rep = dst.point_rep[q];
                bool ok = true;
                for (int x : h.elements) {
                    int conj = group_->mul(group_->mul(group_->inv(rep), x), rep);
                    if (!k.contains(conj)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                std::vector<int> values(src.set->size);
                for (std::size_t u = 0; u < src.set->size; ++u)
                    values[u] = dst.set->apply(src.point_rep[u], static_cast<int>(q));
                hom_lookup_[i][j][values] = homs_[i][j].size();
                homs_[i][j].emplace_back(src.set, dst.set, std::move(values));
            }
        }
        identity_index_[i] = find_hom(i, i, gmap_identity(objects_[i].set).values);
    }

    comp_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        comp_[i].assign(n, {});
        for (std::size_t j = 0; j < n; ++j) {
            comp_[i][j].assign(n, {});
            for (std::size_t k = 0; k < n; ++k) {
                auto& table = comp_[i][j][k];
                table.assign(homs_[i][j].size(),
                             std::vector<std::size_t>(homs_[j][k].size()));
                for (std::size_t f = 0; f < homs_[i][j].size(); ++f)
                    for (std::size_t g = 0; g < homs_[j][k].size(); ++g)
                        table[f][g] =
                            find_hom(i, k, gmap_compose(homs_[j][k][g], homs_[i][j][f]).values);
            }
        }
    }
}

std::size_t OrbitCategory::find_hom(std::size_t i, std::size_t j,
                                    const std::vector<int>& values) const {
    auto it = hom_lookup_[i][j].find(values);
    if (it == hom_lookup_[i][j].end())
        throw std::logic_error("orbit category: morphism not in enumerated hom-set");
    return it->second;
}

std::size_t OrbitCategory::class_of(const Subgroup& h) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        for (const Subgroup& m : classes_[i].members)
            if (m.elements == h.elements) return i;
    throw std::logic_error("orbit category: subgroup not in any class");
}

int OrbitCategory::conjugator_to_representative(const Subgroup& h) const {
    const Subgroup& rep = classes_[class_of(h)].representative;
    for (std::size_t c = 0; c < group_->order; ++c) {
        // c^-1 h c = rep  <=>  h = c rep c^-1.
        if (conjugate_subgroup(rep, static_cast<int>(c)).elements == h.elements)
            return static_cast<int>(c);
    }
    throw std::logic_error("orbit category: conjugator not found");
}

OrbitCategoryPtr orbit_category(GroupPtr g) {
    return std::make_shared<OrbitCategory>(std::move(g));
}

OrbitDecomposition orbits(const GSetPtr& s, const OrbitCategory& cat) {
    OrbitDecomposition dec;
    dec.set = s;
    dec.orbit_of.assign(s->size, static_cast<std::size_t>(-1));
    const FiniteGroup& grp = *s->group;
    for (std::size_t x = 0; x < s->size; ++x) {
        if (dec.orbit_of[x] != static_cast<std::size_t>(-1)) continue;
        Orbit o;
        o.basepoint = static_cast<int>(x);
        std::vector<int> pts;
        for (std::size_t g = 0; g < grp.order; ++g)
            pts.push_back(s->apply(static_cast<int>(g), static_cast<int>(x)));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        o.points = std::move(pts);
        for (int p : o.points) dec.orbit_of[p] = dec.orbits.size();
        o.stabilizer = stabilizer(s, o.basepoint);
        o.class_index = cat.class_of(o.stabilizer);
        o.conjugator = cat.conjugator_to_representative(o.stabilizer);
        o.anchor = s->apply(grp.inv(o.conjugator), o.basepoint);

        const CosetSpace& obj = cat.object(o.class_index);
        std::vector<int> values(obj.set->size);
        for (std::size_t u = 0; u < obj.set->size; ++u)
            values[u] = s->apply(obj.point_rep[u], o.anchor);
        o.identification = GMap(obj.set, s, std::move(values));
        dec.orbits.push_back(std::move(o));
    }
    return dec;
}

GSetPtr coproduct(const GSetPtr& s, const GSetPtr& t) {
    if (s->group != t->group) throw std::invalid_argument("coproduct: group mismatch");
    const std::size_t n = s->size + t->size;
    std::vector<std::vector<int>> act(s->group->order, std::vector<int>(n));
    for (std::size_t g = 0; g < s->group->order; ++g) {
        for (std::size_t x = 0; x < s->size; ++x) act[g][x] = s->act[g][x];
        for (std::size_t x = 0; x < t->size; ++x)
            act[g][s->size + x] = static_cast<int>(s->size) + t->act[g][x];
    }
    return make_gset(s->group, n, std::move(act));
}

GSetPtr product(const GSetPtr& s, const GSetPtr& t) {
    if (s->group != t->group) throw std::invalid_argument("product: group mismatch");
    const std::size_t n = s->size * t->size;
    std::vector<std::vector<int>> act(s->group->order, std::vector<int>(n));
    for (std::size_t g = 0; g < s->group->order; ++g)
        for (std::size_t x = 0; x < s->size; ++x)
            for (std::size_t y = 0; y < t->size; ++y)
                act[g][x * t->size + y] =
                    static_cast<int>(s->act[g][x] * static_cast<int>(t->size) + t->act[g][y]);
    return make_gset(s->group, n, std::move(act));
}

Quotient quotient(const GSetPtr& s) {
    Quotient q;
    q.projection.assign(s->size, static_cast<std::size_t>(-1));
    for (std::size_t x = 0; x < s->size; ++x) {
        if (q.projection[x] != static_cast<std::size_t>(-1)) continue;
        for (std::size_t g = 0; g < s->group->order; ++g)
            q.projection[s->apply(static_cast<int>(g), static_cast<int>(x))] = q.size;
        ++q.size;
    }
    return q;
}

Pullback pullback(const std::vector<std::size_t>& alpha, const GSetPtr& s,
                  const std::vector<std::size_t>& pi, std::size_t q_size) {
    if (pi.size() != s->size) throw std::invalid_argument("pullback: pi size mismatch");
    for (std::size_t x = 0; x < s->size; ++x)
        for (std::size_t g = 0; g < s->group->order; ++g)
            if (pi[s->apply(static_cast<int>(g), static_cast<int>(x))] != pi[x])
                throw std::invalid_argument("pullback: pi not constant on orbits");
    for (std::size_t v : alpha)
        if (v >= q_size) throw std::invalid_argument("pullback: alpha out of range");
    for (std::size_t v : pi)
        if (v >= q_size) throw std::invalid_argument("pullback: pi out of range");

    std::vector<std::pair<std::size_t, int>> pairs;
    for (std::size_t t = 0; t < alpha.size(); ++t)
        for (std::size_t x = 0; x < s->size; ++x)
            if (alpha[t] == pi[x]) pairs.emplace_back(t, static_cast<int>(x));

    std::map<std::pair<std::size_t, int>, int> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> act(s->group->order, std::vector<int>(pairs.size()));
    for (std::size_t g = 0; g < s->group->order; ++g)
        for (std::size_t i = 0; i < pairs.size(); ++i)
            act[g][i] = index.at({pairs[i].first, s->apply(static_cast<int>(g), pairs[i].second)});

    Pullback pb;
    pb.set = make_gset(s->group, pairs.size(), std::move(act));
    std::vector<int> proj(pairs.size());
    pb.base.resize(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        proj[i] = pairs[i].second;
        pb.base[i] = pairs[i].first;
    }
    pb.projection = GMap(pb.set, s, std::move(proj));
    return pb;
}

std::vector<GMap> enumerate_gmaps(const GSetPtr& s, const GSetPtr& t, const OrbitCategory& cat,
                                  std::size_t bound) {
    OrbitDecomposition dec = orbits(s, cat);
    // Per orbit, the candidate images of the anchor are the points of t fixed
    // by the anchor's stabilizer (which is the class representative).
    std::vector<std::vector<int>> choices;
    std::size_t count = 1;
    for (const Orbit& o : dec.orbits) {
        const Subgroup& rep = cat.cls(o.class_index).representative;
        choices.push_back(fixed_points(t, rep));
        count *= choices.back().size();
        if (count > bound) throw std::invalid_argument("enumerate_gmaps: bound exceeded");
        if (count == 0) return {};
    }

    std::vector<GMap> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        std::vector<int> values(s->size, -1);
        for (std::size_t oi = 0; oi < dec.orbits.size(); ++oi) {
            const Orbit& o = dec.orbits[oi];
            const CosetSpace& obj = cat.object(o.class_index);
            int y = choices[oi][pick[oi]];
            for (std::size_t u = 0; u < obj.set->size; ++u)
                values[o.identification.values[u]] = t->apply(obj.point_rep[u], y);
        }
        out.emplace_back(s, t, std::move(values));
        // Next choice vector, last orbit fastest.
        std::size_t i = choices.size();
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (choices.empty()) return out;
    }
}

}  // namespace eqhom
