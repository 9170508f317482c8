#pragma once

// Covariant coefficient systems: additive functors from the orbit-category
// skeleton to finitely generated abelian groups, their additive extension to
// arbitrary finite G-sets, and the constant and fixed-point constructions.

#include "eqhom/grp.hpp"
#include "eqhom/gset.hpp"
#include "eqhom/homalg.hpp"

#include <optional>
#include <vector>

namespace eqhom {

// An abelian group with additive G-action by automorphisms.
struct GModule {
    GroupPtr group;
    FgAbGroup underlying;
    std::vector<AbHom> action;  // per element index
};

GModule make_gmodule(GroupPtr group, FgAbGroup underlying, std::vector<AbHom> action);
GModule trivial_gmodule(GroupPtr group, FgAbGroup underlying);

class CoeffSystem {
public:
    enum class Kind { Constant, FixedPoint, Explicit };

    OrbitCategoryPtr category;
    Kind kind = Kind::Explicit;
    std::vector<FgAbGroup> values;                // per object
    std::vector<std::vector<std::vector<AbHom>>> maps;  // parallel to category homs

    std::optional<FgAbGroup> constant_value;
    std::optional<GModule> module;        // FixedPoint source data
    std::vector<AbHom> value_inclusions;  // FixedPoint: M^H -> M per object

    const AbHom& map(std::size_t i, std::size_t j, std::size_t f) const { return maps[i][j][f]; }
};

CoeffSystem constant_system(const FgAbGroup& a, OrbitCategoryPtr cat);

// S ↦ equivariant maps S -> M, realized on orbits as the H-fixed subgroup,
// with fiberwise-sum transfer along orbit maps.
CoeffSystem fixed_point_system(const GModule& m, OrbitCategoryPtr cat);

struct ExplicitMapSpec {
    std::size_t source_object = 0;
    std::size_t target_object = 0;
    std::size_t hom_index = 0;
    IntMatrix matrix;
};

// Values on every object plus a generating set of morphism matrices; maps are
// extended to all morphisms by composition and functoriality is verified
// exhaustively, naming the offending composable pair on failure.
CoeffSystem explicit_system(std::vector<FgAbGroup> values,
                            const std::vector<ExplicitMapSpec>& generators,
                            OrbitCategoryPtr cat);

// Throws std::invalid_argument naming the violation.
void verify_functoriality(const CoeffSystem& k);

// Additive extension: direct sum over the orbits of s of the value at each
// orbit's class representative, transported along the recorded identification.
struct EvaluatedGSet {
    OrbitDecomposition dec;
    FgAbGroup group;
    std::vector<AbHom> inclusions;   // per orbit
    std::vector<AbHom> projections;  // per orbit
};

EvaluatedGSet evaluate_on_gset(const CoeffSystem& k, const GSetPtr& s);

// The component of the value functor carrying k(G/H_i) into the summand of
// the orbit of target_point; requires H_i to fix target_point.
struct Transport {
    std::size_t orbit = 0;      // orbit of target_point in target_eval
    std::size_t hom_index = 0;  // the factoring orbit-category morphism
    AbHom into_sum;             // k(G/H_i) -> target_eval.group
};

Transport transport_to(const CoeffSystem& k, const EvaluatedGSet& target_eval,
                       std::size_t source_class, int target_point);

// Block matrix of k(f) assembled orbitwise by factoring f through the skeleton.
AbHom evaluate_on_gmap(const CoeffSystem& k, const GMap& f, const EvaluatedGSet& source_eval,
                       const EvaluatedGSet& target_eval);

}  // namespace eqhom
