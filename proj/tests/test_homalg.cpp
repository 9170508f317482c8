#include "doctest.h"
#include "eqhom/homalg.hpp"
#include "oracles.hpp"

#include <random>

using namespace eqhom;

namespace {

IntMatrix mat(const std::vector<std::vector<Int>>& rows) { return IntMatrix::from_rows(rows); }

bool divisibility_chain_ok(const IntMatrix& d) {
    std::vector<Int> diag;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) diag.push_back(d.at(i, i));
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        if (diag[i] < 0 || diag[i + 1] < 0) return false;
        if (diag[i] == 0 && diag[i + 1] != 0) return false;
        if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
    }
    return true;
}

void check_snf(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(divisibility_chain_ok(s.D));
    CHECK(abs(oracle::determinant(s.U)) == 1);
    CHECK(abs(oracle::determinant(s.V)) == 1);
    CHECK(s.U * s.U_inv == IntMatrix::identity(m.rows()));
    CHECK(s.V * s.V_inv == IntMatrix::identity(m.cols()));
    // Diagonal agrees with the transform-free reduction oracle.
    std::vector<Int> diag;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) diag.push_back(s.D.at(i, i));
    CHECK(diag == oracle::snf_diagonal(m));
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    SUBCASE("zero 1x1") {
        SmithResult s = smith_normal_form(mat({{0}}));
        CHECK(s.D == mat({{0}}));
        CHECK(s.U == mat({{1}}));
        CHECK(s.V == mat({{1}}));
    }
    SUBCASE("identity 2x2") {
        SmithResult s = smith_normal_form(IntMatrix::identity(2));
        CHECK(s.D == IntMatrix::identity(2));
    }
    SUBCASE("[[2,4],[6,8]] -> diag(2,4)") {
        IntMatrix m = mat({{2, 4}, {6, 8}});
        SmithResult s = smith_normal_form(m);
        CHECK(s.D == mat({{2, 0}, {0, 4}}));
        check_snf(m);
    }
    SUBCASE("empty shapes") {
        check_snf(IntMatrix(0, 0));
        check_snf(IntMatrix(0, 3));
        check_snf(IntMatrix(3, 0));
    }
}

TEST_CASE("smith normal form is deterministic") {
    IntMatrix m = mat({{3, -1, 4}, {1, 5, -9}, {2, 6, 5}});
    SmithResult a = smith_normal_form(m);
    SmithResult b = smith_normal_form(m);
    CHECK(a.U == b.U);
    CHECK(a.D == b.D);
    CHECK(a.V == b.V);
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(0, 5), entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("kernel lattice and exact solve") {
    IntMatrix m = mat({{2, 4, 6}, {1, 2, 3}});
    IntMatrix k = kernel_lattice(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());

    auto x = solve_matrix(m, mat({{2}, {1}}));
    REQUIRE(x.has_value());
    CHECK(m * *x == mat({{2}, {1}}));
    CHECK_FALSE(solve_matrix(m, mat({{1}, {1}})).has_value());
    CHECK_FALSE(solve_matrix(mat({{2}}), mat({{1}})).has_value());
}

TEST_CASE("group_from_presentation canonical forms") {
    SUBCASE("free of rank 1") {
        FgAbGroup g = group_from_presentation(IntMatrix(0, 1), 1);
        CHECK(g.free_rank() == 1);
        CHECK(g.torsion().empty());
        CHECK(g.to_string() == "Z");
    }
    SUBCASE("Z/2") {
        FgAbGroup g = group_from_presentation(mat({{2}}), 1);
        CHECK(g.free_rank() == 0);
        CHECK(g.torsion() == std::vector<Int>{2});
        CHECK(g.to_string() == "Z/2");
    }
    SUBCASE("relations {(2,4),(6,8)} give Z/2 + Z/4") {
        FgAbGroup g = group_from_presentation(mat({{2, 4}, {6, 8}}), 2);
        CHECK(g.free_rank() == 0);
        CHECK(g.torsion() == std::vector<Int>{2, 4});
    }
    SUBCASE("zero group prints 0") {
        FgAbGroup g = group_from_presentation(mat({{1}}), 1);
        CHECK(g.is_zero());
        CHECK(g.to_string() == "0");
    }
}

TEST_CASE("change of basis maps are mutually inverse modulo relations") {
    FgAbGroup g = group_from_presentation(mat({{2, 4}, {6, 8}, {0, 0}}), 2);
    // to_canonical * from_canonical is the identity on canonical generators.
    IntMatrix tf = g.to_canonical() * g.from_canonical();
    CHECK(g.reduce_vectors(tf) == IntMatrix::identity(g.gens()));
    // from * to is the identity modulo the relation lattice.
    IntMatrix ft = g.from_canonical() * g.to_canonical() - IntMatrix::identity(2);
    IntMatrix lattice = g.relations().transpose();
    CHECK(solve_matrix(lattice, ft).has_value());
}

TEST_CASE("canonicalization is idempotent") {
    for (const FgAbGroup& g :
         {FgAbGroup::canonical(2, {2, 6}), FgAbGroup::canonical(2, {3}),
          FgAbGroup::canonical(0, {2}), FgAbGroup::canonical(3, {})}) {
        FgAbGroup again = group_from_presentation(g.relations(), g.gens());
        CHECK(again == g);
        CHECK(again.to_canonical() == IntMatrix::identity(g.gens()));
        CHECK(again.from_canonical() == IntMatrix::identity(g.gens()));
    }
}

TEST_CASE("abelian homs: construction, composition, direct sums") {
    FgAbGroup z = FgAbGroup::canonical(1, {});
    FgAbGroup z2 = FgAbGroup::canonical(0, {2});

    SUBCASE("identity composes to itself") {
        AbHom times2(z, z, mat({{2}}));
        CHECK(hom_compose(AbHom::identity(z), times2) == times2);
        CHECK(hom_compose(times2, AbHom::identity(z)) == times2);
    }
    SUBCASE("ill-defined matrix rejected") {
        // Z/2 -> Z by 1 is not a homomorphism.
        CHECK_THROWS_AS(AbHom(z2, z, mat({{1}})), std::invalid_argument);
        // Z/4 -> Z/2 by 1 is fine; Z/2 -> Z/4 by 1 is not.
        FgAbGroup z4 = FgAbGroup::canonical(0, {4});
        CHECK_NOTHROW(AbHom(z4, z2, mat({{1}})));
        CHECK_THROWS_AS(AbHom(z2, z4, mat({{1}})), std::invalid_argument);
        CHECK_NOTHROW(AbHom(z2, z4, mat({{2}})));
    }
    SUBCASE("normalization makes equal homs equal") {
        AbHom a(z, z2, mat({{3}}));
        AbHom b(z, z2, mat({{1}}));
        CHECK(a == b);
    }
    SUBCASE("direct sum of Z, Z/2, 0") {
        DirectSum ds = group_direct_sum({z, z2, FgAbGroup()});
        CHECK(ds.group.free_rank() == 1);
        CHECK(ds.group.torsion() == std::vector<Int>{2});
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(hom_compose(ds.projections[i], ds.inclusions[i]).is_identity());
        // The inclusions and projections resolve the identity.
        IntMatrix sum(ds.group.gens(), ds.group.gens());
        for (std::size_t i = 0; i < 3; ++i)
            sum = sum + ds.inclusions[i].matrix() * ds.projections[i].matrix();
        CHECK(AbHom(ds.group, ds.group, sum).is_identity());
    }
    SUBCASE("block sum of x2 on Z and id on Z/2") {
        AbHom sum = hom_direct_sum({AbHom(z, z, mat({{2}})), AbHom::identity(z2)});
        CHECK(sum.matrix() == mat({{2, 0}, {0, 1}}));
    }
    SUBCASE("direct sum re-canonicalizes Z/4 + Z/2") {
        DirectSum ds = group_direct_sum({FgAbGroup::canonical(0, {4}), z2});
        CHECK(ds.group.torsion() == std::vector<Int>{2, 4});
    }
}

TEST_CASE("chain complexes and homology") {
    FgAbGroup zero;
    FgAbGroup z = FgAbGroup::canonical(1, {});

    SUBCASE("0 -> Z -> 0 concentrated in degree 0") {
        ChainComplex c({z}, {});
        CHECK(homology_at(c, 0) == z);
        CHECK(homology_at(c, 1).is_zero());
    }
    SUBCASE("0 -> Z --x2--> Z -> 0") {
        ChainComplex c({z, z}, {AbHom(z, z, mat({{2}}))});
        CHECK(homology_at(c, 0) == FgAbGroup::canonical(0, {2}));
        CHECK(homology_at(c, 1).is_zero());
    }
    SUBCASE("circle: one vertex, one edge, zero differential") {
        ChainComplex c({z, z}, {AbHom::zero(z, z)});
        CHECK(homology_at(c, 0) == z);
        CHECK(homology_at(c, 1) == z);
    }
    SUBCASE("zero differentials return the chain groups") {
        FgAbGroup g = FgAbGroup::canonical(1, {3});
        ChainComplex c({g, g}, {AbHom::zero(g, g)});
        CHECK(homology_at(c, 0) == g);
        CHECK(homology_at(c, 1) == g);
    }
    SUBCASE("d*d != 0 rejected at construction") {
        AbHom id = AbHom::identity(z);
        CHECK_THROWS_AS(ChainComplex({z, z, z}, {id, id}), std::invalid_argument);
    }
    SUBCASE("torsion chain groups") {
        FgAbGroup z4 = FgAbGroup::canonical(0, {4});
        // Z/4 --x2--> Z/4: homology at both spots is Z/2.
        ChainComplex c({z4, z4}, {AbHom(z4, z4, mat({{2}}))});
        CHECK(homology_at(c, 0) == FgAbGroup::canonical(0, {2}));
        CHECK(homology_at(c, 1) == FgAbGroup::canonical(0, {2}));
    }
}

TEST_CASE("random complexes satisfy rank-nullity against the rational oracle") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dim(1, 4), entry(-3, 3), mix(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n0 = dim(rng), n1 = dim(rng), n2 = dim(rng);
        IntMatrix d1(n0, n1);
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n1; ++j) d1.at(i, j) = entry(rng);
        // Build d2 inside ker(d1) so that d1*d2 = 0.
        IntMatrix basis = kernel_lattice(d1);
        IntMatrix coeffs(basis.cols(), n2);
        for (std::size_t i = 0; i < coeffs.rows(); ++i)
            for (std::size_t j = 0; j < n2; ++j) coeffs.at(i, j) = mix(rng);
        IntMatrix d2 = basis * coeffs;

        FgAbGroup c0 = FgAbGroup::canonical(n0, {});
        FgAbGroup c1 = FgAbGroup::canonical(n1, {});
        FgAbGroup c2 = FgAbGroup::canonical(n2, {});
        ChainComplex c({c0, c1, c2}, {AbHom(c1, c0, d1), AbHom(c2, c1, d2)});

        std::size_t ker_rank = n1 - oracle::rational_rank(d1);
        std::size_t im_rank = oracle::rational_rank(d2);
        CHECK(homology_at(c, 1).free_rank() == ker_rank - im_rank);
    }
}

TEST_CASE("hom_from_presentation_gens rejects maps that fail on relations") {
    FgAbGroup g = group_from_presentation(mat({{2, 0}}), 2);  // Z/2 + Z
    FgAbGroup z = FgAbGroup::canonical(1, {});
    // Sending the order-2 presentation generator into Z is not well defined.
    IntMatrix bad(1, 2);
    bad.at(0, 0) = 1;
    CHECK_THROWS_AS(hom_from_presentation_gens(g, z, bad), std::invalid_argument);
    IntMatrix good(1, 2);
    good.at(0, 1) = 5;
    CHECK_NOTHROW(hom_from_presentation_gens(g, z, good));
}
