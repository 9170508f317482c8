#include "doctest.h"
#include "eqhom/sset.hpp"

using namespace eqhom;

namespace {

SimplicialGSet reflection_circle2(GroupPtr c2) { return circle_space(c2, 2, CircleAction::Reflection); }

}  // namespace

TEST_CASE("degeneracy normal form") {
    // s0 s0 = s1 s0 on a vertex.
    SimplexRef v{{}, 0};
    SimplexRef s0 = degenerate_ref(v, 0);
    CHECK(s0.word == std::vector<int>{0});
    CHECK(degenerate_ref(s0, 0).word == std::vector<int>{1, 0});
    CHECK(degenerate_ref(s0, 1).word == std::vector<int>{1, 0});
    // s2 applied to s1 s0 stays decreasing.
    SimplexRef s10 = degenerate_ref(s0, 0);
    CHECK(degenerate_ref(s10, 2).word == std::vector<int>{2, 1, 0});
    CHECK(degenerate_ref(s10, 0).word == std::vector<int>{2, 1, 0});
}

TEST_CASE("face of degenerate refs telescopes on a point") {
    GroupPtr c1 = make_cyclic(1);
    SimplicialGSet pt = point_space(c1);
    // The unique n-simplex is s_{n-1}...s_0 *; every face is the unique one
    // a degree down.
    SimplexRef cur{{}, 0};
    for (int n = 1; n <= 4; ++n) cur = degenerate_ref(cur, n - 1);
    for (int n = 4; n >= 1; --n) {
        SimplexRef expect = cur;
        expect.word.erase(expect.word.begin());
        for (int i = 0; i <= n; ++i) CHECK(pt.face_of_ref(n, cur, i) == expect);
        cur = expect;
    }
}

TEST_CASE("validation") {
    GroupPtr c1 = make_cyclic(1);
    GroupPtr c2 = make_cyclic(2);

    SUBCASE("builders validate") {
        CHECK(validate(point_space(c2)).ok);
        CHECK(validate(interval_space(c2)).ok);
        CHECK(validate(circle_space(c1, 1, CircleAction::Trivial)).ok);
        CHECK(validate(circle_space(c2, 4, CircleAction::Antipodal)).ok);
        CHECK(validate(circle_space(c2, 8, CircleAction::Antipodal)).ok);
        CHECK(validate(reflection_circle2(c2)).ok);
        CHECK(validate(circle_space(c2, 4, CircleAction::Reflection)).ok);
        CHECK(validate(circle_space(c2, 2, CircleAction::Rotation)).ok);
        CHECK(validate(circle_space(make_cyclic(3), 3, CircleAction::Rotation)).ok);
        CHECK(validate(sphere2_space(c1, SphereAction::Trivial)).ok);
        CHECK(validate(sphere2_space(c2, SphereAction::Antipodal)).ok);
    }
    SUBCASE("broken face reported at degree 1") {
        SimplicialGSet x = circle_space(c1, 4, CircleAction::Trivial);
        x.faces[1][0][0] = SimplexRef{{}, 7};
        ValidationReport r = validate(x);
        CHECK_FALSE(r.ok);
        CHECK(r.message.find("degree 1") != std::string::npos);
    }
    SUBCASE("non-equivariant action reported") {
        SimplicialGSet x = circle_space(c2, 4, CircleAction::Antipodal);
        std::swap(x.faces[1][0][0], x.faces[1][0][1]);
        ValidationReport r = validate(x);
        CHECK_FALSE(r.ok);
        CHECK(r.message.find("degree") != std::string::npos);
    }
    SUBCASE("broken simplicial identity located") {
        SimplicialGSet x = sphere2_space(c1, SphereAction::Trivial);
        x.faces[2][0][0] = SimplexRef{{}, 0};
        ValidationReport r = validate(x);
        CHECK_FALSE(r.ok);
        CHECK(r.message.find("degree 2") != std::string::npos);
    }
}

TEST_CASE("builder preconditions") {
    GroupPtr c2 = make_cyclic(2);
    GroupPtr c3 = make_cyclic(3);
    CHECK_THROWS_AS(circle_space(c2, 2, CircleAction::Antipodal), std::invalid_argument);
    CHECK_THROWS_AS(circle_space(c2, 3, CircleAction::Antipodal), std::invalid_argument);
    CHECK_THROWS_AS(circle_space(c3, 4, CircleAction::Antipodal), std::invalid_argument);
    CHECK_THROWS_AS(circle_space(c2, 3, CircleAction::Reflection), std::invalid_argument);
    CHECK_THROWS_AS(circle_space(c2, 3, CircleAction::Rotation), std::invalid_argument);
    CHECK_THROWS_AS(circle_space(make_symmetric(3), 6, CircleAction::Rotation),
                    std::invalid_argument);
    CHECK_THROWS_AS(sphere2_space(c3, SphereAction::Antipodal), std::invalid_argument);
}

TEST_CASE("fixed point simplicial sets") {
    GroupPtr c2 = make_cyclic(2);
    Subgroup full = full_subgroup(c2);

    SUBCASE("trivial action: everything is fixed") {
        SimplicialGSet x = circle_space(c2, 4, CircleAction::Trivial);
        FixedPointSSet f = fixed_point_sset(x, full);
        CHECK(f.sset.count(0) == 4);
        CHECK(f.sset.count(1) == 4);
    }
    SUBCASE("free antipodal action: empty fixed set") {
        SimplicialGSet x = circle_space(c2, 4, CircleAction::Antipodal);
        FixedPointSSet f = fixed_point_sset(x, full);
        CHECK(f.sset.count(0) == 0);
        CHECK(f.sset.count(1) == 0);
        SimplicialGSet s = sphere2_space(c2, SphereAction::Antipodal);
        FixedPointSSet fs = fixed_point_sset(s, full);
        CHECK(fs.sset.count(0) + fs.sset.count(1) + fs.sset.count(2) == 0);
    }
    SUBCASE("reflection circle: two fixed poles") {
        FixedPointSSet f = fixed_point_sset(reflection_circle2(c2), full);
        CHECK(f.sset.count(0) == 2);
        CHECK(f.sset.count(1) == 0);
    }
    SUBCASE("trivial subgroup recovers the underlying simplicial set") {
        SimplicialGSet x = circle_space(c2, 4, CircleAction::Antipodal);
        FixedPointSSet f = fixed_point_sset(x, trivial_subgroup(c2));
        CHECK(f.sset.count(0) == x.count(0));
        CHECK(f.sset.count(1) == x.count(1));
        for (int n = 0; n <= 1; ++n)
            for (std::size_t s = 0; s < x.count(n); ++s)
                CHECK(f.original_index[n][s] == static_cast<int>(s));
    }
}

TEST_CASE("quotient simplicial sets") {
    GroupPtr c1 = make_cyclic(1);
    GroupPtr c2 = make_cyclic(2);

    SUBCASE("trivial group: quotient is the space itself") {
        SimplicialGSet x = circle_space(c1, 3, CircleAction::Trivial);
        QuotientSSet q = quotient_sset(x);
        CHECK(q.sset.count(0) == 3);
        CHECK(q.sset.count(1) == 3);
    }
    SUBCASE("antipodal square circle / C2 = circle with 2 vertices, 2 edges") {
        QuotientSSet q = quotient_sset(circle_space(c2, 4, CircleAction::Antipodal));
        CHECK(q.sset.count(0) == 2);
        CHECK(q.sset.count(1) == 2);
        CHECK(euler_characteristic(q.sset) == 0);
    }
    SUBCASE("reflection circle / C2 = interval") {
        QuotientSSet q = quotient_sset(reflection_circle2(c2));
        CHECK(q.sset.count(0) == 2);
        CHECK(q.sset.count(1) == 1);
    }
    SUBCASE("antipodal sphere / C2 = projective plane model") {
        QuotientSSet q = quotient_sset(sphere2_space(c2, SphereAction::Antipodal));
        CHECK(q.sset.count(0) == 3);
        CHECK(q.sset.count(1) == 6);
        CHECK(q.sset.count(2) == 4);
        CHECK(euler_characteristic(q.sset) == 1);
    }
}

TEST_CASE("builders") {
    GroupPtr c1 = make_cyclic(1);
    GroupPtr c2 = make_cyclic(2);

    SUBCASE("point and interval") {
        CHECK(point_space(c2).count(0) == 1);
        CHECK(euler_characteristic(interval_space(c2)) == 1);
    }
    SUBCASE("circle Euler characteristic zero, free quotient halves it") {
        SimplicialGSet x = circle_space(c2, 8, CircleAction::Antipodal);
        CHECK(euler_characteristic(x) == 0);
        QuotientSSet q = quotient_sset(x);
        CHECK(euler_characteristic(x) ==
              static_cast<long>(c2->order) * euler_characteristic(q.sset));
    }
    SUBCASE("octahedron counts") {
        SimplicialGSet s = sphere2_space(c1, SphereAction::Trivial);
        CHECK(s.count(0) == 6);
        CHECK(s.count(1) == 12);
        CHECK(s.count(2) == 8);
        CHECK(euler_characteristic(s) == 2);
    }
    SUBCASE("induced space is discrete") {
        GSetPtr reg = regular_gset(c2);
        SimplicialGSet x = induced_space(reg);
        CHECK(x.dim == 0);
        CHECK(x.count(0) == 2);
    }
    SUBCASE("cone and suspension") {
        SimplicialGSet circle = circle_space(c2, 4, CircleAction::Antipodal);
        SimplicialGSet cone = cone_space(circle);
        CHECK(euler_characteristic(cone) == 1);
        CHECK(cone.dim == 2);
        // The apex must be fixed, so the action is no longer free.
        CHECK(fixed_point_sset(cone, full_subgroup(c2)).sset.count(0) == 1);

        SimplicialGSet sus = suspension_space(circle);
        CHECK(euler_characteristic(sus) == 2);
        CHECK(sus.count(0) == 6);
        CHECK(sus.count(1) == 12);
        CHECK(sus.count(2) == 8);

        SimplicialGSet sus_pts = suspension_space(induced_space(trivial_gset(c2, 2)));
        CHECK(sus_pts.count(0) == 4);
        CHECK(sus_pts.count(1) == 4);
        CHECK(euler_characteristic(sus_pts) == 0);
    }
}

TEST_CASE("materialized degrees") {
    GroupPtr c1 = make_cyclic(1);
    GroupPtr c2 = make_cyclic(2);

    SUBCASE("point has exactly one simplex per degree") {
        SimplicialGSet pt = point_space(c1);
        for (int n = 0; n <= 4; ++n) {
            RefSet rs = materialize_degree(pt, n);
            CHECK(rs.refs.size() == 1);
            CHECK(static_cast<int>(rs.refs[0].word.size()) == n);
        }
    }
    SUBCASE("counts over the octahedron") {
        SimplicialGSet s = sphere2_space(c1, SphereAction::Trivial);
        CHECK(materialize_degree(s, 0).refs.size() == 6);
        CHECK(materialize_degree(s, 1).refs.size() == 12 + 6);
        CHECK(materialize_degree(s, 2).refs.size() == 8 + 2 * 12 + 6);
        // Degree 3: 3 words over each triangle, 3 over each edge, 1 per vertex.
        CHECK(materialize_degree(s, 3).refs.size() == 3 * 8 + 3 * 12 + 6);
    }
    SUBCASE("face identities hold on materialized refs") {
        SimplicialGSet x = circle_space(c2, 4, CircleAction::Antipodal);
        for (int n = 2; n <= 3; ++n) {
            RefSet rs = materialize_degree(x, n);
            RefSet prev = materialize_degree(x, n - 1);
            RefSet prev2 = materialize_degree(x, n - 2);
            for (const SimplexRef& r : rs.refs)
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i) {
                        SimplexRef a = x.face_of_ref(n - 1, x.face_of_ref(n, r, j), i);
                        SimplexRef b = x.face_of_ref(n - 1, x.face_of_ref(n, r, i), j - 1);
                        CHECK(a == b);
                        CHECK(prev2.index.count(a) == 1);
                    }
            for (const SimplexRef& r : rs.refs)
                for (int i = 0; i <= n; ++i) CHECK(prev.index.count(x.face_of_ref(n, r, i)) == 1);
        }
    }
    SUBCASE("action on refs commutes with faces") {
        SimplicialGSet x = sphere2_space(c2, SphereAction::Antipodal);
        RefSet rs = materialize_degree(x, 3);
        for (const SimplexRef& r : rs.refs)
            for (int i = 0; i <= 3; ++i) {
                SimplexRef a = x.face_of_ref(3, x.act_on_ref(1, 3, r), i);
                SimplexRef b = x.act_on_ref(1, 2, x.face_of_ref(3, r, i));
                CHECK(a == b);
            }
    }
}
