#include "doctest.h"
#include "eqhom/grp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace eqhom;

namespace {

// Exhaustive subset-closure oracle: every subset whose closure is itself.
std::set<std::vector<int>> brute_force_subgroups(const GroupPtr& g) {
    const std::size_t n = g->order;
    std::set<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        if (!(mask & (std::size_t(1) << g->identity))) continue;
        std::vector<int> elems;
        for (std::size_t x = 0; x < n; ++x)
            if (mask & (std::size_t(1) << x)) elems.push_back(static_cast<int>(x));
        bool closed = true;
        for (int a : elems)
            for (int b : elems) {
                if (!std::binary_search(elems.begin(), elems.end(), g->mul(a, b))) closed = false;
                if (!closed) break;
            }
        for (int a : elems)
            if (!std::binary_search(elems.begin(), elems.end(), g->inv(a))) closed = false;
        if (closed) out.insert(elems);
    }
    return out;
}

// Index of a permutation of {0..n-1} in lexicographic order.
int perm_index(std::vector<int> p) {
    std::vector<int> base(p.size());
    std::iota(base.begin(), base.end(), 0);
    int idx = 0;
    do {
        if (base == p) return idx;
        ++idx;
    } while (std::next_permutation(base.begin(), base.end()));
    return -1;
}

}  // namespace

TEST_CASE("cyclic groups") {
    GroupPtr c2 = make_cyclic(2);
    CHECK(c2->order == 2);
    CHECK(c2->table == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    GroupPtr c1 = make_cyclic(1);
    CHECK(c1->order == 1);
    CHECK(c1->identity == 0);
}

TEST_CASE("symmetric group composition matches the permutation oracle") {
    GroupPtr s3 = make_symmetric(3);
    REQUIRE(s3->order == 6);
    std::vector<int> base{0, 1, 2};
    std::vector<std::vector<int>> perms;
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> comp(3);
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            CHECK(s3->mul(a, b) == perm_index(comp));
        }
}

TEST_CASE("dihedral group is a valid group of order 2n") {
    CHECK(make_dihedral(1)->order == 2);
    CHECK(make_dihedral(2)->order == 4);
    GroupPtr d4 = make_dihedral(4);
    CHECK(d4->order == 8);
    // s r s = r^-1: with s = element 4, r = element 1.
    int s = 4, r = 1;
    CHECK(d4->mul(d4->mul(s, r), s) == d4->inv(r));
}

TEST_CASE("invalid tables are rejected") {
    CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(group_from_table({{1, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("subgroup enumeration matches the subset-closure oracle") {
    for (auto g : {make_cyclic(2), make_cyclic(4), make_symmetric(3), make_dihedral(4)}) {
        std::vector<Subgroup> subs = all_subgroups(g);
        std::set<std::vector<int>> got;
        for (const Subgroup& h : subs) got.insert(h.elements);
        CHECK(got == brute_force_subgroups(g));
        CHECK(got.size() == subs.size());
        // Lagrange and sortedness.
        for (std::size_t i = 0; i < subs.size(); ++i) {
            CHECK(g->order % subs[i].order() == 0);
            if (i + 1 < subs.size())
                CHECK((subs[i].order() < subs[i + 1].order() ||
                       (subs[i].order() == subs[i + 1].order() &&
                        subs[i].elements < subs[i + 1].elements)));
        }
    }
}

TEST_CASE("subgroup counts") {
    CHECK(all_subgroups(make_cyclic(2)).size() == 2);
    CHECK(all_subgroups(make_cyclic(4)).size() == 3);
    CHECK(all_subgroups(make_symmetric(3)).size() == 6);
    CHECK(all_subgroups(make_dihedral(4)).size() == 10);
}

TEST_CASE("order bound enforced") {
    CHECK_THROWS_AS(all_subgroups(make_symmetric(4), 20), std::invalid_argument);
    CHECK_NOTHROW(all_subgroups(make_symmetric(4)));
}

TEST_CASE("conjugacy classes of subgroups") {
    SUBCASE("trivial group: one class") {
        CHECK(conjugacy_classes_of_subgroups(make_cyclic(1)).size() == 1);
    }
    SUBCASE("abelian groups have singleton classes") {
        auto classes = conjugacy_classes_of_subgroups(make_cyclic(4));
        CHECK(classes.size() == 3);
        for (const auto& c : classes) CHECK(c.members.size() == 1);
    }
    SUBCASE("S3: four classes of orders 1,2,3,6") {
        auto classes = conjugacy_classes_of_subgroups(make_symmetric(3));
        REQUIRE(classes.size() == 4);
        std::vector<std::size_t> orders;
        for (const auto& c : classes) orders.push_back(c.representative.order());
        CHECK(orders == std::vector<std::size_t>{1, 2, 3, 6});
        // The three order-2 subgroups form one class.
        CHECK(classes[1].members.size() == 3);
    }
    SUBCASE("classes partition the subgroup list") {
        GroupPtr g = make_dihedral(4);
        auto classes = conjugacy_classes_of_subgroups(g);
        std::set<std::vector<int>> seen;
        std::size_t total = 0;
        for (const auto& c : classes) {
            for (const auto& m : c.members) {
                CHECK(seen.insert(m.elements).second);
                ++total;
            }
            // Representative is the lexicographic minimum of its class.
            for (const auto& m : c.members) CHECK(c.representative.elements <= m.elements);
        }
        CHECK(total == all_subgroups(g).size());
        CHECK(classes.size() == 8);
    }
}

TEST_CASE("conjugate subgroups stay subgroups") {
    GroupPtr s3 = make_symmetric(3);
    for (const Subgroup& h : all_subgroups(s3))
        for (std::size_t x = 0; x < s3->order; ++x) {
            Subgroup c = conjugate_subgroup(h, static_cast<int>(x));
            Subgroup cl = subgroup_closure(s3, c.elements);
            CHECK(c.elements == cl.elements);
        }
}
