#pragma once

// Finite groups as validated Cayley tables, subgroup enumeration by closure,
// and conjugacy classes of subgroups.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace eqhom {

struct FiniteGroup {
    std::size_t order = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    int identity = 0;
    std::vector<int> inverses;

    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverses[a]; }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Validates associativity, identity and inverses; throws std::invalid_argument.
GroupPtr group_from_table(std::vector<std::vector<int>> table);

GroupPtr make_cyclic(std::size_t n);
GroupPtr make_dihedral(std::size_t n);   // order 2n
GroupPtr make_symmetric(std::size_t n);  // order n!

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // sorted ascending

    std::size_t order() const { return elements.size(); }
    bool contains(int e) const;
    bool operator==(const Subgroup& o) const { return elements == o.elements; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
    std::string to_string() const;
};

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& generators);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup conjugate_subgroup(const Subgroup& h, int g);  // g h g^-1

// Complete duplicate-free list sorted by (size, elements), enumerated by
// breadth-first closure under adjoining single elements rather than scanning
// all subsets.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t order_bound = 24);

struct SubgroupClass {
    Subgroup representative;  // lexicographically minimal member
    std::vector<Subgroup> members;
};

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const GroupPtr& g);

}  // namespace eqhom
