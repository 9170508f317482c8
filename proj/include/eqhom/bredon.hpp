#pragma once

// The equivariant chain pipelines. A Bredon chain group in degree n is the
// coefficient system evaluated on the degree-n simplices; the same group is
// rebuilt independently as an explicit coequalizer presentation over the
// orbit-category skeleton, as the complex of the quotient space for constant
// systems, and as the G-fixed part of M tensor X for fixed-point systems.
// verify_theorem runs all applicable pipelines and demands exact agreement.

#include "eqhom/coeff.hpp"
#include "eqhom/homalg.hpp"
#include "eqhom/sset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eqhom {

enum class Variant { Normalized, Unnormalized };

std::string variant_name(Variant v);

// One degree of chain data: the simplices as a G-set (nondegenerate ones, or
// every normal form through this degree), and the evaluated coefficients.
struct DegreeData {
    GSetPtr simplices;
    std::vector<SimplexRef> refs;       // unnormalized only
    std::map<SimplexRef, int> ref_index;
    EvaluatedGSet eval;
};

struct BredonComplex {
    Variant variant = Variant::Normalized;
    ChainComplex complex;
    std::vector<DegreeData> degrees;  // 0 .. max_degree+1
};

// C_n = k(simplices in degree n) with the alternating-sum differential;
// normalized drops faces whose normal form is degenerate, unnormalized
// materializes every simplex through max_degree+1.
BredonComplex cellular_chain_complex(const SimplicialGSet& x, const CoeffSystem& k,
                                     Variant variant, int max_degree);

struct CoendGenerator {
    std::size_t object = 0;
    std::size_t simplex = 0;  // position in the fixed list of that object
    std::size_t gen = 0;      // canonical generator of the value there
};

// Explicit coequalizer presentation of the degree-n chain group: generators
// (G/H, simplex fixed by H, generator of k(G/H)), relations from orbit-category
// morphisms and torsion, plus the mutually inverse comparison maps to the
// cellular group.
struct CoendPresentation {
    int degree = 0;
    Variant variant = Variant::Normalized;
    std::vector<CoendGenerator> generators;
    std::vector<std::vector<int>> fixed;  // per object: fixed simplex indices
    std::vector<std::size_t> gen_offset;  // per object: first generator index
    IntMatrix relations;
    FgAbGroup quotient;
    AbHom to_cellular;
    AbHom from_cellular;
};

CoendPresentation coequalizer_coend(const SimplicialGSet& x, const CoeffSystem& k, int degree,
                                    Variant variant);

struct CoendComplex {
    Variant variant = Variant::Normalized;
    std::vector<CoendPresentation> degrees;
    ChainComplex complex;
    bool comparisons_ok = true;  // both composites with the cellular side are identities
};

CoendComplex coend_complex(const SimplicialGSet& x, const CoeffSystem& k, int max_degree,
                           Variant variant);

std::vector<FgAbGroup> coend_homology(const SimplicialGSet& x, const CoeffSystem& k,
                                      int max_degree, Variant variant);

// Constant coefficients: the chain complex of X/G with the comparison maps
// q (orbit projection) and p (pullback section), mutually inverse degreewise,
// q a chain map.
struct QuotientPipeline {
    BredonComplex cellular;
    BredonComplex quotient;  // over the trivial group
    std::vector<AbHom> q;    // cellular_n -> quotient_n
    std::vector<AbHom> p;    // quotient_n -> cellular_n
    bool inverses_ok = true;
    bool chain_map_ok = true;
};

QuotientPipeline quotient_pipeline(const SimplicialGSet& x, const CoeffSystem& constant_k,
                                   Variant variant, int max_degree);

// Fixed-point coefficients M_tr: degreewise the G-fixed subgroup of the sum of
// copies of M indexed by simplices, with comparison isomorphisms f, h against
// the cellular M_tr complex.
struct FixedPointPipeline {
    BredonComplex cellular;
    ChainComplex complex;
    std::vector<FgAbGroup> ambient;  // per degree, for reporting
    std::vector<AbHom> f;            // fixed_n -> cellular_n
    std::vector<AbHom> h;            // cellular_n -> fixed_n
    bool inverses_ok = true;
    bool chain_map_ok = true;
};

FixedPointPipeline fixed_point_pipeline(const SimplicialGSet& x, const CoeffSystem& mtr_k,
                                        Variant variant, int max_degree);

std::vector<FgAbGroup> homology_list(const ChainComplex& c, int max_degree);

struct PipelineRun {
    std::string name;
    std::vector<FgAbGroup> homology;  // degrees 0..max_degree
};

struct TheoremReport {
    int max_degree = 0;
    std::vector<PipelineRun> runs;
    std::vector<std::string> failures;
    bool pass = true;
};

// Cellular and coequalizer pipelines in both variants, plus the quotient
// pipeline for constant systems and the fixed-point pipeline for M_tr; exact
// equality of canonical forms per degree, comparison maps verified as
// mutually inverse.
TheoremReport verify_theorem(const SimplicialGSet& x, const CoeffSystem& k, int max_degree);

}  // namespace eqhom
