#include "doctest.h"
#include "eqhom/gset.hpp"
#include "oracles.hpp"

#include <set>

using namespace eqhom;

namespace {

// Every function s -> t, filtered by the equivariance condition.
std::size_t brute_force_gmap_count(const GSetPtr& s, const GSetPtr& t) {
    if (s->size == 0) return 1;
    std::vector<int> f(s->size, 0);
    std::size_t count = 0;
    for (;;) {
        bool ok = true;
        for (std::size_t g = 0; g < s->group->order && ok; ++g)
            for (std::size_t x = 0; x < s->size && ok; ++x)
                if (f[s->apply(static_cast<int>(g), static_cast<int>(x))] !=
                    t->apply(static_cast<int>(g), f[x]))
                    ok = false;
        if (ok) ++count;
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == static_cast<int>(t->size)) f[i++] = 0;
        if (i == f.size()) break;
    }
    return count;
}

std::size_t coset_criterion_count(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
    std::size_t n = 0;
    for (std::size_t x = 0; x < g->order; ++x) {
        bool ok = true;
        for (int e : h.elements)
            if (!k.contains(g->mul(g->mul(g->inv(static_cast<int>(x)), e), static_cast<int>(x)))) {
                ok = false;
                break;
            }
        if (ok) ++n;
    }
    return n / k.order();
}

}  // namespace

TEST_CASE("orbit decomposition") {
    SUBCASE("C2 swapping {a,b}, fixing {c}") {
        GroupPtr c2 = make_cyclic(2);
        auto cat = orbit_category(c2);
        GSetPtr s = make_gset(c2, 3, {{0, 1, 2}, {1, 0, 2}});
        OrbitDecomposition dec = orbits(s, *cat);
        REQUIRE(dec.orbits.size() == 2);
        CHECK(dec.orbits[0].points == std::vector<int>{0, 1});
        CHECK(dec.orbits[0].stabilizer.order() == 1);
        CHECK(dec.orbits[1].points == std::vector<int>{2});
        CHECK(dec.orbits[1].stabilizer.order() == 2);
    }
    SUBCASE("regular action: one free orbit") {
        GroupPtr s3 = make_symmetric(3);
        auto cat = orbit_category(s3);
        OrbitDecomposition dec = orbits(regular_gset(s3), *cat);
        REQUIRE(dec.orbits.size() == 1);
        CHECK(dec.orbits[0].stabilizer.order() == 1);
    }
    SUBCASE("S3 on cosets of a transposition subgroup") {
        GroupPtr s3 = make_symmetric(3);
        auto cat = orbit_category(s3);
        Subgroup h = subgroup_closure(s3, {2});  // an order-2 subgroup
        REQUIRE(h.order() == 2);
        CosetSpace cs = coset_space(h);
        OrbitDecomposition dec = orbits(cs.set, *cat);
        REQUIRE(dec.orbits.size() == 1);
        CHECK(dec.orbits[0].stabilizer.order() == 2);
        // Brute-force stabilizer scan agrees.
        Subgroup st = stabilizer(cs.set, dec.orbits[0].basepoint);
        CHECK(st.elements == dec.orbits[0].stabilizer.elements);
        // Anchor has stabilizer exactly the class representative.
        CHECK(stabilizer(cs.set, dec.orbits[0].anchor).elements ==
              cat->cls(dec.orbits[0].class_index).representative.elements);
    }
    SUBCASE("identification is a G-isomorphism onto the orbit") {
        GroupPtr c2 = make_cyclic(2);
        auto cat = orbit_category(c2);
        GSetPtr s = make_gset(c2, 4, {{0, 1, 2, 3}, {1, 0, 3, 2}});
        OrbitDecomposition dec = orbits(s, *cat);
        for (const Orbit& o : dec.orbits) {
            std::set<int> image(o.identification.values.begin(), o.identification.values.end());
            CHECK(image == std::set<int>(o.points.begin(), o.points.end()));
            CHECK(o.identification.values.size() == o.points.size());
        }
        // Re-decomposing an orbit yields a single orbit.
        CHECK(dec.orbits.size() == 2);
    }
}

TEST_CASE("categorical constructions") {
    GroupPtr c2 = make_cyclic(2);
    auto cat = orbit_category(c2);
    GSetPtr reg = regular_gset(c2);

    SUBCASE("quotient of the regular action is a point") {
        Quotient q = quotient(reg);
        CHECK(q.size == 1);
    }
    SUBCASE("fixed points of the trivial subgroup is everything") {
        CHECK(fixed_points(reg, trivial_subgroup(c2)).size() == 2);
        CHECK(fixed_points(reg, full_subgroup(c2)).empty());
    }
    SUBCASE("product of free orbits, orbit count by Burnside") {
        GSetPtr p = product(reg, reg);
        CHECK(p->size == 4);
        auto fixct = [&](std::size_t g) {
            std::size_t n = 0;
            for (std::size_t x = 0; x < p->size; ++x)
                if (p->apply(static_cast<int>(g), static_cast<int>(x)) == static_cast<int>(x)) ++n;
            return n;
        };
        CHECK(orbits(p, *cat).orbits.size() == oracle::burnside_orbit_count(2, fixct));
        CHECK(orbits(p, *cat).orbits.size() == 2);
        for (const Orbit& o : orbits(p, *cat).orbits) CHECK(o.stabilizer.order() == 1);
    }
    SUBCASE("coproduct blocks") {
        GSetPtr c = coproduct(reg, trivial_gset(c2, 1));
        CHECK(c->size == 3);
        CHECK(c->apply(1, 0) == 1);
        CHECK(c->apply(1, 2) == 2);
    }
}

TEST_CASE("pullback") {
    GroupPtr c2 = make_cyclic(2);
    GSetPtr s = make_gset(c2, 3, {{0, 1, 2}, {1, 0, 2}});  // orbits {0,1}, {2}
    Quotient q = quotient(s);
    REQUIRE(q.size == 2);

    SUBCASE("identity base recovers s") {
        Pullback pb = pullback({0, 1}, s, q.projection, q.size);
        CHECK(pb.set->size == s->size);
        std::set<int> img(pb.projection.values.begin(), pb.projection.values.end());
        CHECK(img.size() == s->size);
    }
    SUBCASE("one point hitting the free orbit gives that orbit") {
        Pullback pb = pullback({0}, s, q.projection, q.size);
        CHECK(pb.set->size == 2);
        CHECK(stabilizer(pb.set, 0).order() == 1);
    }
    SUBCASE("two points on the same orbit give a disjoint doubling") {
        Pullback pb = pullback({0, 0}, s, q.projection, q.size);
        CHECK(pb.set->size == 4);
        CHECK(pb.base == std::vector<std::size_t>{0, 0, 1, 1});
        auto cat = orbit_category(c2);
        CHECK(orbits(pb.set, *cat).orbits.size() == 2);
    }
}

TEST_CASE("gmap validation") {
    GroupPtr c2 = make_cyclic(2);
    GSetPtr reg = regular_gset(c2);
    GSetPtr pt = trivial_gset(c2, 1);
    CHECK_NOTHROW(GMap(reg, pt, {0, 0}));
    CHECK_THROWS_AS(GMap(reg, reg, {0, 0}), std::invalid_argument);
}

TEST_CASE("orbit category structure") {
    SUBCASE("trivial group: one object, one morphism") {
        auto cat = orbit_category(make_cyclic(1));
        CHECK(cat->object_count() == 1);
        CHECK(cat->homs(0, 0).size() == 1);
    }
    SUBCASE("C2 hom-set sizes") {
        auto cat = orbit_category(make_cyclic(2));
        REQUIRE(cat->object_count() == 2);
        CHECK(cat->homs(0, 0).size() == 2);
        CHECK(cat->homs(0, 1).size() == 1);
        CHECK(cat->homs(1, 0).size() == 0);
        CHECK(cat->homs(1, 1).size() == 1);
    }
    SUBCASE("hom counts match the coset criterion and brute force") {
        for (auto g : {make_cyclic(2), make_cyclic(3), make_cyclic(4), make_cyclic(6),
                       make_cyclic(8), make_symmetric(3), make_dihedral(4)}) {
            auto cat = orbit_category(g);
            for (std::size_t i = 0; i < cat->object_count(); ++i)
                for (std::size_t j = 0; j < cat->object_count(); ++j) {
                    std::size_t expect = coset_criterion_count(
                        g, cat->cls(i).representative, cat->cls(j).representative);
                    CHECK(cat->homs(i, j).size() == expect);
                }
        }
    }
    SUBCASE("composition is associative and unital") {
        for (auto g : {make_cyclic(2), make_cyclic(4), make_symmetric(3), make_dihedral(4)}) {
            auto cat = orbit_category(g);
            const std::size_t n = cat->object_count();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t f = 0; f < cat->homs(i, j).size(); ++f) {
                        CHECK(cat->compose_index(i, i, j, cat->identity_index(i), f) == f);
                        CHECK(cat->compose_index(i, j, j, f, cat->identity_index(j)) == f);
                    }
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t l = 0; l < n; ++l)
                            for (std::size_t f = 0; f < cat->homs(i, j).size(); ++f)
                                for (std::size_t h = 0; h < cat->homs(j, k).size(); ++h)
                                    for (std::size_t m = 0; m < cat->homs(k, l).size(); ++m) {
                                        std::size_t hf = cat->compose_index(i, j, k, f, h);
                                        std::size_t mh = cat->compose_index(j, k, l, h, m);
                                        CHECK(cat->compose_index(i, k, l, hf, m) ==
                                              cat->compose_index(i, j, l, f, mh));
                                    }
            }
        }
    }
}

TEST_CASE("enumerate_gmaps") {
    GroupPtr c2 = make_cyclic(2);
    auto cat2 = orbit_category(c2);
    GSetPtr reg = regular_gset(c2);
    GSetPtr pt = trivial_gset(c2, 1);

    SUBCASE("free source: |G/K| maps") {
        CHECK(enumerate_gmaps(reg, reg, *cat2).size() == 2);
        CHECK(enumerate_gmaps(reg, pt, *cat2).size() == 1);
    }
    SUBCASE("G/G source") {
        CHECK(enumerate_gmaps(pt, pt, *cat2).size() == 1);
        CHECK(enumerate_gmaps(pt, reg, *cat2).empty());
    }
    SUBCASE("S3: Hom(G/H, G/H) for a transposition subgroup is a single map") {
        GroupPtr s3 = make_symmetric(3);
        auto cat = orbit_category(s3);
        Subgroup h = subgroup_closure(s3, {2});
        CosetSpace cs = coset_space(h);
        auto maps = enumerate_gmaps(cs.set, cs.set, *cat);
        CHECK(maps.size() == 1);
        CHECK(maps.size() == brute_force_gmap_count(cs.set, cs.set));
    }
    SUBCASE("counts match brute force on assorted pairs") {
        GroupPtr s3 = make_symmetric(3);
        auto cat = orbit_category(s3);
        GSetPtr r3 = regular_gset(s3);
        GSetPtr p3 = trivial_gset(s3, 2);
        Subgroup a3 = subgroup_closure(s3, {3});  // order-3 subgroup
        GSetPtr cs = coset_space(a3).set;
        for (const GSetPtr& src : {r3, p3, cs})
            for (const GSetPtr& dst : {r3, p3, cs})
                CHECK(enumerate_gmaps(src, dst, *cat).size() ==
                      brute_force_gmap_count(src, dst));
    }
    SUBCASE("bound enforcement") {
        GroupPtr c1 = make_cyclic(1);
        auto cat = orbit_category(c1);
        GSetPtr big = trivial_gset(c1, 8);
        CHECK_THROWS_AS(enumerate_gmaps(big, big, *cat, 100), std::invalid_argument);
    }
}
