#pragma once

// Degreewise-finite simplicial sets with G-action, stored by nondegenerate
// simplices. Degenerate simplices are handled through degeneracy words in
// normal form (strictly decreasing indices over a nondegenerate base), so the
// full simplicial structure stays finite and computable.

#include "eqhom/grp.hpp"
#include "eqhom/gset.hpp"

#include <map>
#include <string>
#include <vector>

namespace eqhom {

struct SimplexRef {
    std::vector<int> word;  // strictly decreasing degeneracy indices
    int base = 0;           // nondegenerate simplex in degree (n - word.size())

    bool degenerate() const { return !word.empty(); }
    bool operator==(const SimplexRef& o) const { return word == o.word && base == o.base; }
    bool operator!=(const SimplexRef& o) const { return !(*this == o); }
    bool operator<(const SimplexRef& o) const {
        if (word.size() != o.word.size()) return word.size() < o.word.size();
        if (base != o.base) return base < o.base;
        return word < o.word;
    }
};

// s_j applied to a normal form, renormalized via s_j s_h = s_{h+1} s_j (j <= h).
SimplexRef degenerate_ref(SimplexRef r, int j);

struct SimplicialGSet {
    GroupPtr group;
    int dim = 0;
    std::vector<std::vector<std::string>> names;             // per degree
    std::vector<std::vector<std::vector<SimplexRef>>> faces; // faces[n][s][i], n >= 1
    std::vector<std::vector<std::vector<int>>> action;       // action[n][g][s]

    std::size_t count(int n) const {
        return (n >= 0 && n <= dim) ? names[n].size() : 0;
    }
    const SimplexRef& face(int n, int s, int i) const { return faces[n][s][i]; }
    GSetPtr degree_gset(int n) const;

    // Face of a possibly degenerate simplex in degree n.
    SimplexRef face_of_ref(int n, const SimplexRef& r, int i) const;
    // G acts through the nondegenerate base; r lives in degree n.
    SimplexRef act_on_ref(int g, int n, const SimplexRef& r) const {
        int bd = n - static_cast<int>(r.word.size());
        return SimplexRef{r.word, action[bd][g][r.base]};
    }
    std::string ref_name(int n, const SimplexRef& r) const;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
};

// Checks structure, simplicial identities after normal-form reduction, and
// equivariance of the action; the message locates the first failure.
ValidationReport validate(const SimplicialGSet& x);
SimplicialGSet validated(SimplicialGSet x);  // throws std::invalid_argument on failure

struct FixedPointSSet {
    SimplicialGSet sset;                           // over the trivial group
    std::vector<std::vector<int>> original_index;  // per degree
};

// Nondegenerate simplices fixed by every element of h, with restricted faces.
FixedPointSSet fixed_point_sset(const SimplicialGSet& x, const Subgroup& h);

struct QuotientSSet {
    SimplicialGSet sset;                                // over the trivial group
    std::vector<std::vector<std::size_t>> projection;   // per degree: simplex -> orbit
};

// Degreewise orbits with induced faces.
QuotientSSet quotient_sset(const SimplicialGSet& x);

// All simplices of one degree, degenerates materialized via normal forms, as a
// G-set through the action on bases.
struct RefSet {
    int degree = 0;
    std::vector<SimplexRef> refs;
    GSetPtr set;
    std::map<SimplexRef, int> index;

    int index_of(const SimplexRef& r) const;
};

RefSet materialize_degree(const SimplicialGSet& x, int n);

enum class CircleAction { Trivial, Rotation, Antipodal, Reflection };
enum class SphereAction { Trivial, Antipodal };

SimplicialGSet point_space(GroupPtr g);
SimplicialGSet interval_space(GroupPtr g);

// Oriented loop with k vertices and k edges for trivial/rotation/antipodal;
// reflection uses two pole-to-pole arcs (k even) so the flip is simplicial.
SimplicialGSet circle_space(GroupPtr g, int subdivisions, CircleAction a);

// Octahedral 2-sphere; the antipodal flip permutes each axis pair.
SimplicialGSet sphere2_space(GroupPtr g, SphereAction a);

SimplicialGSet induced_space(const GSetPtr& s);  // discrete
SimplicialGSet cone_space(const SimplicialGSet& x);
SimplicialGSet suspension_space(const SimplicialGSet& x);

long euler_characteristic(const SimplicialGSet& x);

}  // namespace eqhom
