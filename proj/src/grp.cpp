#include "eqhom/grp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqhom {

GroupPtr group_from_table(std::vector<std::vector<int>> table) {
    const std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("group: empty table");
    for (const auto& row : table) {
        if (row.size() != n) throw std::invalid_argument("group: table not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw std::invalid_argument("group: table entry out of range");
    }

    int identity = -1;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            ok = table[e][a] == static_cast<int>(a) && table[a][e] == static_cast<int>(a);
        if (ok) {
            identity = static_cast<int>(e);
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("group: no identity element");

    std::vector<int> inverses(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == identity && table[b][a] == identity) {
                inverses[a] = static_cast<int>(b);
                break;
            }
        if (inverses[a] < 0) throw std::invalid_argument("group: element without inverse");
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("group: associativity fails at (" +
                                                std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(c) + ")");

    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->table = std::move(table);
    g->identity = identity;
    g->inverses = std::move(inverses);
    return g;
}

GroupPtr make_cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic: order must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<int>((a + b) % n);
    return group_from_table(std::move(t));
}

GroupPtr make_dihedral(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dihedral: order parameter must be >= 1");
    // Element eps*n + i stands for s^eps r^i with s r s = r^-1.
    const std::size_t m = 2 * n;
    auto idx = [n](int eps, long i) {
        long r = ((i % static_cast<long>(n)) + n) % static_cast<long>(n);
        return static_cast<int>(eps * static_cast<long>(n) + r);
    };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            int e1 = static_cast<int>(a / n), i1 = static_cast<int>(a % n);
            int e2 = static_cast<int>(b / n), i2 = static_cast<int>(b % n);
            long i = (e2 ? -static_cast<long>(i1) : static_cast<long>(i1)) + i2;
            t[a][b] = idx(e1 ^ e2, i);
        }
    return group_from_table(std::move(t));
}

GroupPtr make_symmetric(std::size_t n) {
    if (n == 0) throw std::invalid_argument("symmetric: degree must be >= 1");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

    const std::size_t m = perms.size();
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<int> comp(n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
            t[a][b] = index.at(comp);
        }
    return group_from_table(std::move(t));
}

bool Subgroup::contains(int e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

std::string Subgroup::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? "," : "") << elements[i];
    os << "}";
    return os.str();
}

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& generators) {
    std::set<int> elems{g->identity};
    std::vector<int> work(elems.begin(), elems.end());
    for (int x : generators)
        if (elems.insert(x).second) work.push_back(x);
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < work.size(); ++j) {
            int p = g->mul(work[i], work[j]);
            if (elems.insert(p).second) work.push_back(p);
        }
    return Subgroup{g, {elems.begin(), elems.end()}};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {g->identity}}; }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order);
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{g, std::move(all)};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
    const FiniteGroup& grp = *h.parent;
    std::vector<int> out;
    out.reserve(h.elements.size());
    for (int x : h.elements) out.push_back(grp.mul(grp.mul(g, x), grp.inv(g)));
    std::sort(out.begin(), out.end());
    return Subgroup{h.parent, std::move(out)};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t order_bound) {
    if (g->order > order_bound)
        throw std::invalid_argument("all_subgroups: group order " + std::to_string(g->order) +
                                    " exceeds bound " + std::to_string(order_bound));
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> queue{trivial_subgroup(g)};
    seen.insert(queue.front().elements);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Subgroup h = queue[i];
        for (int x = 0; x < static_cast<int>(g->order); ++x) {
            if (h.contains(x)) continue;
            std::vector<int> gens = h.elements;
            gens.push_back(x);
            Subgroup k = subgroup_closure(g, gens);
            if (seen.insert(k.elements).second) queue.push_back(std::move(k));
        }
    }
    std::sort(queue.begin(), queue.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return queue;
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const GroupPtr& g) {
    std::vector<Subgroup> subs = all_subgroups(g);
    std::set<std::vector<int>> assigned;
    std::vector<SubgroupClass> classes;
    for (const Subgroup& h : subs) {
        if (assigned.count(h.elements)) continue;
        std::set<std::vector<int>> orbit;
        for (std::size_t x = 0; x < g->order; ++x)
            orbit.insert(conjugate_subgroup(h, static_cast<int>(x)).elements);
        SubgroupClass cls;
        cls.representative = Subgroup{g, *orbit.begin()};
        for (const auto& elems : orbit) {
            cls.members.push_back(Subgroup{g, elems});
            assigned.insert(elems);
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.representative.order() != b.representative.order())
            return a.representative.order() < b.representative.order();
        return a.representative.elements < b.representative.elements;
    });
    return classes;
}

}  // namespace eqhom
