#pragma once

// Finite G-sets and equivariant maps, orbit/stabilizer decomposition,
// categorical constructions, and the orbit-category skeleton with fully
// enumerated hom-sets and cached composition.

#include "eqhom/grp.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace eqhom {

struct GSet {
    GroupPtr group;
    std::size_t size = 0;
    std::vector<std::vector<int>> act;  // act[g][x]

    int apply(int g, int x) const { return act[g][x]; }
};

using GSetPtr = std::shared_ptr<const GSet>;

// Validates the action laws; throws std::invalid_argument.
GSetPtr make_gset(GroupPtr group, std::size_t size, std::vector<std::vector<int>> act);
GSetPtr trivial_gset(GroupPtr group, std::size_t size);
GSetPtr regular_gset(GroupPtr group);  // G acting on itself by left translation

struct GMap {
    GSetPtr source;
    GSetPtr target;
    std::vector<int> values;

    GMap() = default;
    GMap(GSetPtr source, GSetPtr target, std::vector<int> values);  // checks equivariance

    int operator()(int x) const { return values[x]; }
    bool operator==(const GMap& o) const { return values == o.values; }
};

GMap gmap_compose(const GMap& g, const GMap& f);
GMap gmap_identity(const GSetPtr& s);

// G/H realized on actual cosets; point_rep holds the minimal element of each
// coset and anchor is the coset of the identity (stabilizer exactly H).
struct CosetSpace {
    GSetPtr set;
    Subgroup subgroup;
    std::vector<int> point_rep;
    std::vector<int> elem_coset;  // element -> point
    int anchor = 0;
};

CosetSpace coset_space(const Subgroup& h);

class OrbitCategory {
public:
    explicit OrbitCategory(GroupPtr group);

    const GroupPtr& group() const { return group_; }
    std::size_t object_count() const { return objects_.size(); }
    const std::vector<SubgroupClass>& classes() const { return classes_; }
    const SubgroupClass& cls(std::size_t i) const { return classes_[i]; }
    const CosetSpace& object(std::size_t i) const { return objects_[i]; }
    const std::vector<GMap>& homs(std::size_t i, std::size_t j) const { return homs_[i][j]; }
    std::size_t identity_index(std::size_t i) const { return identity_index_[i]; }

    // Index of g∘f in homs(i, k) for f in homs(i, j), g in homs(j, k).
    std::size_t compose_index(std::size_t i, std::size_t j, std::size_t k, std::size_t f,
                              std::size_t g) const {
        return comp_[i][j][k][f][g];
    }
    std::size_t find_hom(std::size_t i, std::size_t j, const std::vector<int>& values) const;

    // Class of a subgroup (by conjugacy), and the minimal c with
    // c^-1 H c = representative.
    std::size_t class_of(const Subgroup& h) const;
    int conjugator_to_representative(const Subgroup& h) const;

private:
    GroupPtr group_;
    std::vector<SubgroupClass> classes_;
    std::vector<CosetSpace> objects_;
    std::vector<std::vector<std::vector<GMap>>> homs_;
    std::vector<std::vector<std::map<std::vector<int>, std::size_t>>> hom_lookup_;
    std::vector<std::size_t> identity_index_;
    std::vector<std::vector<std::vector<std::vector<std::vector<std::size_t>>>>> comp_;
};

using OrbitCategoryPtr = std::shared_ptr<const OrbitCategory>;

OrbitCategoryPtr orbit_category(GroupPtr g);

struct Orbit {
    std::vector<int> points;   // ascending
    int basepoint = 0;         // minimal point
    Subgroup stabilizer;       // of the basepoint
    std::size_t class_index = 0;
    int conjugator = 0;        // minimal c with c^-1 Stab(basepoint) c = representative
    int anchor = 0;            // c^-1 * basepoint; stabilizer exactly the representative
    GMap identification;       // object(class_index) -> ambient set, onto this orbit
};

struct OrbitDecomposition {
    GSetPtr set;
    std::vector<Orbit> orbits;
    std::vector<std::size_t> orbit_of;  // point -> orbit index
};

OrbitDecomposition orbits(const GSetPtr& s, const OrbitCategory& cat);

// Stabilizer of a point.
Subgroup stabilizer(const GSetPtr& s, int x);

// Points fixed by every element of h, ascending.
std::vector<int> fixed_points(const GSetPtr& s, const Subgroup& h);

GSetPtr coproduct(const GSetPtr& s, const GSetPtr& t);  // left block, then right block
GSetPtr product(const GSetPtr& s, const GSetPtr& t);    // row-major pairs

struct Quotient {
    std::size_t size = 0;            // number of orbits
    std::vector<std::size_t> projection;  // point -> orbit index
};

Quotient quotient(const GSetPtr& s);

struct Pullback {
    GSetPtr set;              // pairs (t, x) with alpha(t) = pi(x), t-major order
    GMap projection;          // onto s
    std::vector<std::size_t> base;  // pair -> t
};

// alpha: T -> Q on plain finite sets, pi: s -> Q constant on orbits.
Pullback pullback(const std::vector<std::size_t>& alpha, const GSetPtr& s,
                  const std::vector<std::size_t>& pi, std::size_t q_size);

// All equivariant maps s -> t in deterministic order; throws when the count
// would exceed the bound.
std::vector<GMap> enumerate_gmaps(const GSetPtr& s, const GSetPtr& t, const OrbitCategory& cat,
                                  std::size_t bound = 1u << 20);

}  // namespace eqhom
