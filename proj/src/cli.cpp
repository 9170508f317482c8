#include "eqhom/cli.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace eqhom::cli {

namespace {

struct Token {
    std::string text;
    int col = 1;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line line{number, {}};
        std::string cur;
        int start = 0;
        auto flush = [&](int end) {
            if (!cur.empty()) line.tokens.push_back({cur, start + 1 - static_cast<int>(cur.size())});
            cur.clear();
            (void)end;
        };
        for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
            char c = raw[i];
            if (c == '-' && i + 1 < static_cast<int>(raw.size()) && raw[i + 1] == '>') {
                flush(i);
                line.tokens.push_back({"->", i + 1});
                ++i;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                flush(i);
                continue;
            }
            if (std::string(":=[]{},;").find(c) != std::string::npos) {
                flush(i);
                line.tokens.push_back({std::string(1, c), i + 1});
                continue;
            }
            if (cur.empty()) start = i;
            cur.push_back(c);
        }
        flush(static_cast<int>(raw.size()));
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& msg) {
    int col = tok < l.tokens.size() ? l.tokens[tok].col
                                    : (l.tokens.empty() ? 1 : l.tokens.back().col + 1);
    throw ParseError(l.number, col, msg);
}

long parse_long(const Line& l, std::size_t tok, const std::string& what) {
    if (tok >= l.tokens.size()) fail(l, tok, "expected " + what);
    try {
        std::size_t used = 0;
        long v = std::stol(l.tokens[tok].text, &used);
        if (used != l.tokens[tok].text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail(l, tok, "expected " + what + ", got '" + l.tokens[tok].text + "'");
    }
}

Int parse_int_entry(const Line& l, std::size_t tok) {
    if (tok >= l.tokens.size()) fail(l, tok, "expected an integer");
    try {
        return Int(l.tokens[tok].text);
    } catch (...) {
        fail(l, tok, "expected an integer, got '" + l.tokens[tok].text + "'");
    }
}

void expect(const Line& l, std::size_t tok, const std::string& text) {
    if (tok >= l.tokens.size() || l.tokens[tok].text != text)
        fail(l, tok, "expected '" + text + "'");
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// Group expression: `0`, or `+`-separated Z / Z^r / Z/m factors forming a
// canonical chain. Written without spaces inside each factor.
FgAbGroup parse_group_expr(const Line& l, std::size_t from, std::size_t to) {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
    bool any = false;
    for (std::size_t t = from; t < to; ++t) {
        const std::string& s = l.tokens[t].text;
        if (s == "+") continue;
        any = true;
        if (s == "0") continue;
        if (s == "Z") {
            ++free_rank;
        } else if (s.rfind("Z^", 0) == 0 && is_integer(s.substr(2))) {
            long r = std::stol(s.substr(2));
            if (r < 0) fail(l, t, "negative free rank");
            free_rank += static_cast<std::size_t>(r);
        } else if (s.rfind("Z/", 0) == 0 && is_integer(s.substr(2))) {
            torsion.push_back(Int(s.substr(2)));
        } else {
            fail(l, t, "expected a group factor (0, Z, Z^r or Z/m), got '" + s + "'");
        }
    }
    if (!any) fail(l, from, "expected a group expression");
    try {
        return FgAbGroup::canonical(free_rank, std::move(torsion));
    } catch (const std::invalid_argument& e) {
        fail(l, from, std::string(e.what()) + " (write torsion in divisibility order)");
    }
}

// Matrix rows separated by ';', entries by spaces.
IntMatrix parse_matrix(const Line& l, std::size_t from, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    std::size_t t = from;
    for (std::size_t r = 0; r < rows; ++r) {
        if (r > 0) {
            expect(l, t, ";");
            ++t;
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.at(r, c) = parse_int_entry(l, t);
            ++t;
        }
    }
    if (t != l.tokens.size())
        fail(l, t, "unexpected trailing tokens in a " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " matrix");
    return m;
}

}  // namespace

GroupPtr parse_group(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty group description");
    const Line& head = lines[0];
    expect(head, 0, "group");
    if (head.tokens.size() < 2) fail(head, 1, "expected a group kind");
    const std::string kind = head.tokens[1].text;
    try {
        if (kind == "cyclic" || kind == "dihedral" || kind == "symmetric") {
            long n = parse_long(head, 2, "a size parameter");
            if (n < 1) fail(head, 2, "size parameter must be >= 1");
            if (lines.size() > 1) fail(lines[1], 0, "unexpected extra line after 'group'");
            if (kind == "cyclic") return make_cyclic(static_cast<std::size_t>(n));
            if (kind == "dihedral") return make_dihedral(static_cast<std::size_t>(n));
            return make_symmetric(static_cast<std::size_t>(n));
        }
        if (kind == "table") {
            long n = parse_long(head, 2, "the table size");
            if (n < 1) fail(head, 2, "table size must be >= 1");
            if (lines.size() != static_cast<std::size_t>(n) + 1)
                fail(head, 2, "expected " + std::to_string(n) + " table rows");
            std::vector<std::vector<int>> table;
            for (long r = 0; r < n; ++r) {
                const Line& row = lines[r + 1];
                if (row.tokens.size() != static_cast<std::size_t>(n))
                    fail(row, row.tokens.size(), "expected " + std::to_string(n) + " entries");
                std::vector<int> entries;
                for (long c = 0; c < n; ++c)
                    entries.push_back(static_cast<int>(parse_long(row, c, "a table entry")));
                table.push_back(std::move(entries));
            }
            return group_from_table(std::move(table));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(head.number, head.tokens[0].col, e.what());
    }
    fail(head, 1, "unknown group kind '" + kind + "'");
}

namespace {

SimplicialGSet parse_builder_space(const Line& l, GroupPtr group, std::size_t from) {
    if (from >= l.tokens.size()) fail(l, from, "expected a builder name");
    const std::string name = l.tokens[from].text;
    auto done = [&](std::size_t after) {
        if (after < l.tokens.size()) fail(l, after, "unexpected trailing tokens");
    };
    try {
        if (name == "point") {
            done(from + 1);
            return point_space(std::move(group));
        }
        if (name == "interval") {
            done(from + 1);
            return interval_space(std::move(group));
        }
        if (name == "circle") {
            long k = parse_long(l, from + 1, "the subdivision count");
            if (from + 2 >= l.tokens.size()) fail(l, from + 2, "expected a circle action");
            const std::string act = l.tokens[from + 2].text;
            done(from + 3);
            CircleAction a;
            if (act == "trivial") a = CircleAction::Trivial;
            else if (act == "rotation") a = CircleAction::Rotation;
            else if (act == "antipodal") a = CircleAction::Antipodal;
            else if (act == "reflection") a = CircleAction::Reflection;
            else fail(l, from + 2, "unknown circle action '" + act + "'");
            return circle_space(std::move(group), static_cast<int>(k), a);
        }
        if (name == "sphere2") {
            if (from + 1 >= l.tokens.size()) fail(l, from + 1, "expected a sphere action");
            const std::string act = l.tokens[from + 1].text;
            done(from + 2);
            SphereAction a;
            if (act == "trivial") a = SphereAction::Trivial;
            else if (act == "antipodal") a = SphereAction::Antipodal;
            else fail(l, from + 1, "unknown sphere action '" + act + "'");
            return sphere2_space(std::move(group), a);
        }
        if (name == "cone") return cone_space(parse_builder_space(l, std::move(group), from + 1));
        if (name == "suspension")
            return suspension_space(parse_builder_space(l, std::move(group), from + 1));
    } catch (const std::invalid_argument& e) {
        throw ParseError(l.number, l.tokens[from].col, e.what());
    }
    fail(l, from, "unknown builder '" + name + "'");
}

}  // namespace

SimplicialGSet parse_space(const std::string& text, GroupPtr group) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty space description");
    const Line& head = lines[0];
    expect(head, 0, "space");
    if (head.tokens.size() < 2) fail(head, 1, "expected 'builder' or 'dim'");

    if (head.tokens[1].text == "builder") {
        if (lines.size() > 1) fail(lines[1], 0, "unexpected extra line after a builder space");
        return parse_builder_space(head, std::move(group), 2);
    }

    expect(head, 1, "dim");
    long dim = parse_long(head, 2, "the dimension bound");
    if (dim < 0) fail(head, 2, "dimension bound must be >= 0");

    SimplicialGSet x;
    x.group = group;
    x.dim = static_cast<int>(dim);
    x.names.resize(dim + 1);
    x.faces.resize(dim + 1);

    std::vector<std::map<std::string, int>> index(dim + 1);
    std::map<std::string, long> degree_of;
    // First pass: declarations. Names are globally unique so face lines can
    // refer to a target by name alone.
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& l = lines[li];
        if (l.tokens[0].text != "simplices") continue;
        long n = parse_long(l, 1, "a degree");
        if (n < 0 || n > dim) fail(l, 1, "degree out of range 0.." + std::to_string(dim));
        expect(l, 2, ":");
        for (std::size_t t = 3; t < l.tokens.size(); ++t) {
            const std::string& name = l.tokens[t].text;
            if (is_integer(name) || name == "s")
                fail(l, t, "simplex names must not be integers or 's'");
            if (!degree_of.emplace(name, n).second)
                fail(l, t, "duplicate simplex name '" + name + "'");
            index[n].emplace(name, static_cast<int>(x.names[n].size()));
            x.names[n].push_back(name);
        }
    }
    for (long n = 0; n <= dim; ++n)
        x.faces[n].assign(x.names[n].size(),
                          std::vector<SimplexRef>(n >= 1 ? n + 1 : 0));
    std::vector<std::vector<std::vector<bool>>> face_seen(dim + 1);
    for (long n = 1; n <= dim; ++n)
        face_seen[n].assign(x.names[n].size(), std::vector<bool>(n + 1, false));

    // Identity action everywhere by default; action lines overwrite.
    x.action.resize(dim + 1);
    for (long n = 0; n <= dim; ++n) {
        std::vector<int> id(x.names[n].size());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
        x.action[n].assign(group->order, id);
    }

    auto find_simplex = [&](const Line& l, std::size_t t, long degree) {
        if (t >= l.tokens.size()) fail(l, t, "expected a simplex name");
        auto it = index[degree].find(l.tokens[t].text);
        if (it == index[degree].end())
            fail(l, t, "unknown degree-" + std::to_string(degree) + " simplex '" +
                           l.tokens[t].text + "'");
        return it->second;
    };

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& l = lines[li];
        const std::string& key = l.tokens[0].text;
        if (key == "simplices") continue;
        if (key == "face") {
            if (l.tokens.size() < 2) fail(l, 1, "expected a simplex name");
            auto found = degree_of.find(l.tokens[1].text);
            if (found == degree_of.end() || found->second < 1)
                fail(l, 1, "unknown positive-degree simplex '" + l.tokens[1].text + "'");
            long n = found->second;
            int s = index[n][l.tokens[1].text];
            long i = parse_long(l, 2, "a face index");
            if (i < 0 || i > n) fail(l, 2, "face index out of range 0.." + std::to_string(n));
            expect(l, 3, "=");
            std::size_t t = 4;
            std::vector<int> word;
            while (t < l.tokens.size() && l.tokens[t].text == "s") {
                word.push_back(static_cast<int>(parse_long(l, t + 1, "a degeneracy index")));
                t += 2;
            }
            long target_degree = n - 1 - static_cast<long>(word.size());
            if (target_degree < 0) fail(l, t, "degeneracy word too long for this degree");
            int target = find_simplex(l, t, target_degree);
            if (t + 1 != l.tokens.size()) fail(l, t + 1, "unexpected trailing tokens");
            SimplexRef ref{word, target};
            x.faces[n][s][i] = ref;
            if (face_seen[n][s][i]) fail(l, 0, "face declared twice");
            face_seen[n][s][i] = true;
            continue;
        }
        if (key == "action") {
            long e = parse_long(l, 1, "an element index");
            if (e < 0 || static_cast<std::size_t>(e) >= group->order)
                fail(l, 1, "element index out of range");
            long n = parse_long(l, 2, "a degree");
            if (n < 0 || n > dim) fail(l, 2, "degree out of range");
            expect(l, 3, ":");
            if (l.tokens.size() - 4 != x.names[n].size())
                fail(l, 4, "expected " + std::to_string(x.names[n].size()) + " image names");
            for (std::size_t t = 4; t < l.tokens.size(); ++t)
                x.action[n][e][t - 4] = find_simplex(l, t, n);
            continue;
        }
        fail(l, 0, "unknown declaration '" + key + "'");
    }

    for (long n = 1; n <= dim; ++n)
        for (std::size_t s = 0; s < x.names[n].size(); ++s)
            for (long i = 0; i <= n; ++i)
                if (!face_seen[n][s][i])
                    throw ParseError(1, 1, "missing face " + std::to_string(i) + " of '" +
                                               x.names[n][s] + "' in degree " + std::to_string(n));

    ValidationReport rep = validate(x);
    if (!rep.ok) throw ParseError(1, 1, "space fails validation: " + rep.message);
    return x;
}

namespace {

Subgroup parse_subgroup_spec(const Line& l, std::size_t& t, const GroupPtr& g) {
    expect(l, t, "{");
    ++t;
    std::vector<int> elems;
    bool expect_elem = true;
    while (t < l.tokens.size() && l.tokens[t].text != "}") {
        if (expect_elem) {
            long e = parse_long(l, t, "an element index");
            if (e < 0 || static_cast<std::size_t>(e) >= g->order)
                fail(l, t, "element index out of range");
            elems.push_back(static_cast<int>(e));
        } else {
            expect(l, t, ",");
        }
        expect_elem = !expect_elem;
        ++t;
    }
    expect(l, t, "}");
    ++t;
    std::sort(elems.begin(), elems.end());
    return Subgroup{g, std::move(elems)};
}

std::size_t class_index_of(const Line& l, std::size_t tok, const OrbitCategory& cat,
                           const Subgroup& h) {
    for (std::size_t i = 0; i < cat.object_count(); ++i)
        if (cat.cls(i).representative.elements == h.elements) return i;
    fail(l, tok, "subgroup " + h.to_string() +
                     " is not a class representative (use the lexicographic minimum)");
}

}  // namespace

CoeffSystem parse_coeff(const std::string& text, OrbitCategoryPtr cat) {
    const GroupPtr& g = cat->group();
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty coefficient description");
    const Line& head = lines[0];
    expect(head, 0, "coeff");
    if (head.tokens.size() < 2) fail(head, 1, "expected 'constant', 'module' or 'explicit'");
    const std::string kind = head.tokens[1].text;

    if (kind == "constant") {
        FgAbGroup a = parse_group_expr(head, 2, head.tokens.size());
        if (lines.size() > 1) fail(lines[1], 0, "unexpected extra line after 'coeff constant'");
        return constant_system(a, std::move(cat));
    }

    if (kind == "module") {
        long rank = parse_long(head, 2, "the free rank");
        if (rank < 0) fail(head, 2, "free rank must be >= 0");
        std::vector<Int> torsion;
        for (std::size_t t = 3; t < head.tokens.size(); ++t)
            torsion.push_back(parse_int_entry(head, t));
        FgAbGroup m;
        try {
            m = FgAbGroup::canonical(static_cast<std::size_t>(rank), torsion);
        } catch (const std::invalid_argument& e) {
            fail(head, 3, e.what());
        }
        std::vector<AbHom> action(g->order, AbHom::identity(m));
        std::vector<bool> given(g->order, false);
        for (std::size_t li = 1; li < lines.size(); ++li) {
            const Line& l = lines[li];
            expect(l, 0, "act");
            long e = parse_long(l, 1, "an element index");
            if (e < 0 || static_cast<std::size_t>(e) >= g->order)
                fail(l, 1, "element index out of range");
            if (given[e]) fail(l, 1, "duplicate action for element " + std::to_string(e));
            given[e] = true;
            expect(l, 2, ":");
            IntMatrix mat = parse_matrix(l, 3, m.gens(), m.gens());
            try {
                action[e] = AbHom(m, m, std::move(mat));
            } catch (const std::invalid_argument& err) {
                throw ParseError(l.number, l.tokens[3].col, err.what());
            }
        }
        try {
            return fixed_point_system(make_gmodule(g, m, std::move(action)), std::move(cat));
        } catch (const std::invalid_argument& e) {
            throw ParseError(head.number, head.tokens[0].col, e.what());
        }
    }

    if (kind == "explicit") {
        if (head.tokens.size() > 2) fail(head, 2, "unexpected tokens after 'coeff explicit'");
        std::vector<FgAbGroup> values(cat->object_count());
        std::vector<bool> have_value(cat->object_count(), false);
        std::vector<ExplicitMapSpec> gens;

        for (std::size_t li = 1; li < lines.size(); ++li) {
            const Line& l = lines[li];
            const std::string& key = l.tokens[0].text;
            if (key == "value") {
                std::size_t t = 1;
                Subgroup h = parse_subgroup_spec(l, t, g);
                std::size_t obj = class_index_of(l, 1, *cat, h);
                expect(l, t, ":");
                ++t;
                values[obj] = parse_group_expr(l, t, l.tokens.size());
                have_value[obj] = true;
                continue;
            }
            if (key == "map") {
                std::size_t t = 1;
                Subgroup h = parse_subgroup_spec(l, t, g);
                std::size_t src = class_index_of(l, 1, *cat, h);
                expect(l, t, "->");
                ++t;
                Subgroup k2 = parse_subgroup_spec(l, t, g);
                std::size_t dst = class_index_of(l, t - 1, *cat, k2);
                expect(l, t, "[");
                long rep = parse_long(l, t + 1, "a coset representative element");
                if (rep < 0 || static_cast<std::size_t>(rep) >= g->order)
                    fail(l, t + 1, "element index out of range");
                expect(l, t + 2, "]");
                expect(l, t + 3, ":");
                // The morphism G/H -> G/K sending the anchor to rep*K.
                const CosetSpace& srco = cat->object(src);
                const CosetSpace& dsto = cat->object(dst);
                std::vector<int> vals(srco.set->size);
                int q = dsto.elem_coset[rep];
                for (std::size_t u = 0; u < srco.set->size; ++u)
                    vals[u] = dsto.set->apply(srco.point_rep[u], q);
                std::size_t hom_index;
                try {
                    hom_index = cat->find_hom(src, dst, vals);
                } catch (const std::logic_error&) {
                    fail(l, t + 1, "no orbit map sends the base coset to element " +
                                       std::to_string(rep) + "'s coset (coset criterion fails)");
                }
                ExplicitMapSpec spec;
                spec.source_object = src;
                spec.target_object = dst;
                spec.hom_index = hom_index;
                std::size_t matrix_from = t + 4;
                if (!have_value[src] || !have_value[dst])
                    fail(l, 0, "declare 'value' lines before the maps that use them");
                spec.matrix =
                    parse_matrix(l, matrix_from, values[dst].gens(), values[src].gens());
                gens.push_back(std::move(spec));
                continue;
            }
            fail(l, 0, "unknown declaration '" + key + "'");
        }
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!have_value[i])
                throw ParseError(1, 1, "missing value for orbit class " +
                                           cat->cls(i).representative.to_string());
        try {
            return explicit_system(std::move(values), gens, std::move(cat));
        } catch (const std::invalid_argument& e) {
            throw ParseError(1, 1, e.what());
        }
    }

    fail(head, 1, "unknown coefficient kind '" + kind + "'");
}

namespace {

std::string group_expr(const FgAbGroup& a) {
    if (a.is_zero()) return "0";
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty()) out += " + ";
        out += s;
    };
    if (a.free_rank() == 1) add("Z");
    else if (a.free_rank() > 1) add("Z^" + std::to_string(a.free_rank()));
    for (const Int& d : a.torsion()) add("Z/" + d.str());
    return out;
}

std::string matrix_text(const IntMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += " ;";
        for (std::size_t c = 0; c < m.cols(); ++c) out += " " + m.at(r, c).str();
    }
    return out;
}

}  // namespace

std::string serialize_group(const FiniteGroup& g) {
    std::ostringstream os;
    os << "group table " << g.order << "\n";
    for (std::size_t a = 0; a < g.order; ++a) {
        for (std::size_t b = 0; b < g.order; ++b) os << (b ? " " : "") << g.table[a][b];
        os << "\n";
    }
    return os.str();
}

std::string serialize_space(const SimplicialGSet& x) {
    std::ostringstream os;
    os << "space dim " << x.dim << "\n";
    for (int n = 0; n <= x.dim; ++n) {
        if (x.count(n) == 0) continue;
        os << "simplices " << n << ":";
        for (const std::string& name : x.names[n]) os << " " << name;
        os << "\n";
    }
    for (int n = 1; n <= x.dim; ++n)
        for (std::size_t s = 0; s < x.count(n); ++s)
            for (int i = 0; i <= n; ++i) {
                const SimplexRef& f = x.faces[n][s][i];
                os << "face " << x.names[n][s] << " " << i << " =";
                for (int j : f.word) os << " s " << j;
                os << " " << x.names[n - 1 - f.word.size()][f.base] << "\n";
            }
    for (std::size_t e = 0; e < x.group->order; ++e) {
        if (static_cast<int>(e) == x.group->identity) continue;
        for (int n = 0; n <= x.dim; ++n) {
            if (x.count(n) == 0) continue;
            os << "action " << e << " " << n << ":";
            for (std::size_t s = 0; s < x.count(n); ++s)
                os << " " << x.names[n][x.action[n][e][s]];
            os << "\n";
        }
    }
    return os.str();
}

std::string serialize_coeff(const CoeffSystem& k) {
    std::ostringstream os;
    switch (k.kind) {
        case CoeffSystem::Kind::Constant:
            os << "coeff constant " << group_expr(*k.constant_value) << "\n";
            break;
        case CoeffSystem::Kind::FixedPoint: {
            const GModule& m = *k.module;
            os << "coeff module " << m.underlying.free_rank();
            for (const Int& d : m.underlying.torsion()) os << " " << d.str();
            os << "\n";
            for (std::size_t e = 0; e < m.group->order; ++e) {
                if (static_cast<int>(e) == m.group->identity) continue;
                os << "act " << e << ":" << matrix_text(m.action[e].matrix()) << "\n";
            }
            break;
        }
        case CoeffSystem::Kind::Explicit: {
            const OrbitCategory& oc = *k.category;
            os << "coeff explicit\n";
            for (std::size_t i = 0; i < oc.object_count(); ++i)
                os << "value " << oc.cls(i).representative.to_string() << ": "
                   << group_expr(k.values[i]) << "\n";
            for (std::size_t i = 0; i < oc.object_count(); ++i)
                for (std::size_t j = 0; j < oc.object_count(); ++j)
                    for (std::size_t f = 0; f < oc.homs(i, j).size(); ++f) {
                        const GMap& gm = oc.homs(i, j)[f];
                        int rep = oc.object(j).point_rep[gm.values[oc.object(i).anchor]];
                        os << "map " << oc.cls(i).representative.to_string() << " -> "
                           << oc.cls(j).representative.to_string() << " [" << rep
                           << "]:" << matrix_text(k.map(i, j, f).matrix()) << "\n";
                    }
            break;
        }
    }
    return os.str();
}

namespace {

struct PipelineOutput {
    std::string name;
    std::vector<FgAbGroup> homology;
};

}  // namespace

RunResult run_job(const JobSpec& job) {
    RunResult res;
    GroupPtr g;
    SimplicialGSet x;
    CoeffSystem k;
    try {
        g = parse_group(job.group_text);
        x = parse_space(job.space_text, g);
        k = parse_coeff(job.coeff_text, orbit_category(g));
    } catch (const ParseError& e) {
        res.exit_code = 2;
        res.error = std::string("input error: ") + e.what() + "\n";
        return res;
    }
    if (job.max_degree < 0) {
        res.exit_code = 2;
        res.error = "input error: max degree must be >= 0\n";
        return res;
    }

    std::vector<std::string> pipelines = job.pipelines;
    if (pipelines.empty()) {
        pipelines = {"cellular", "coend"};
        if (k.kind == CoeffSystem::Kind::Constant) pipelines.push_back("quotient");
        if (k.kind == CoeffSystem::Kind::FixedPoint) pipelines.push_back("fixedpoint");
    }
    std::vector<Variant> variants;
    if (job.variant == "normalized") variants = {Variant::Normalized};
    else if (job.variant == "unnormalized") variants = {Variant::Unnormalized};
    else if (job.variant == "both") variants = {Variant::Normalized, Variant::Unnormalized};
    else {
        res.exit_code = 2;
        res.error = "input error: unknown variant '" + job.variant + "'\n";
        return res;
    }

    std::vector<PipelineOutput> outs;
    std::vector<std::string> failures;
    for (const std::string& p : pipelines) {
        for (Variant v : variants) {
            std::string name = p + ":" + variant_name(v);
            if (p == "cellular") {
                outs.push_back({name, homology_list(
                                          cellular_chain_complex(x, k, v, job.max_degree).complex,
                                          job.max_degree)});
            } else if (p == "coend") {
                CoendComplex cc = coend_complex(x, k, job.max_degree, v);
                outs.push_back({name, homology_list(cc.complex, job.max_degree)});
                if (!cc.comparisons_ok)
                    failures.push_back(name + ": cellular comparison not an isomorphism");
            } else if (p == "quotient") {
                if (k.kind != CoeffSystem::Kind::Constant) {
                    res.exit_code = 2;
                    res.error = "input error: the quotient pipeline needs constant coefficients\n";
                    return res;
                }
                QuotientPipeline qp = quotient_pipeline(x, k, v, job.max_degree);
                outs.push_back({name, homology_list(qp.quotient.complex, job.max_degree)});
                if (!qp.inverses_ok) failures.push_back(name + ": q, p are not mutually inverse");
                if (!qp.chain_map_ok) failures.push_back(name + ": q is not a chain map");
            } else if (p == "fixedpoint") {
                if (k.kind != CoeffSystem::Kind::FixedPoint) {
                    res.exit_code = 2;
                    res.error =
                        "input error: the fixedpoint pipeline needs module coefficients\n";
                    return res;
                }
                FixedPointPipeline pp = fixed_point_pipeline(x, k, v, job.max_degree);
                outs.push_back({name, homology_list(pp.complex, job.max_degree)});
                if (!pp.inverses_ok) failures.push_back(name + ": f, h are not mutually inverse");
                if (!pp.chain_map_ok) failures.push_back(name + ": f is not a chain map");
            } else {
                res.exit_code = 2;
                res.error = "input error: unknown pipeline '" + p + "'\n";
                return res;
            }
        }
    }

    for (int n = 0; n <= job.max_degree; ++n)
        for (std::size_t i = 0; i < outs.size(); ++i)
            for (std::size_t j = i + 1; j < outs.size(); ++j)
                if (outs[i].homology[n] != outs[j].homology[n])
                    failures.push_back("degree " + std::to_string(n) + ": " + outs[i].name +
                                       " gives " + outs[i].homology[n].to_string() + " but " +
                                       outs[j].name + " gives " +
                                       outs[j].homology[n].to_string());

    std::ostringstream os;
    if (job.format == "record") {
        for (const PipelineOutput& o : outs)
            for (int n = 0; n <= job.max_degree; ++n)
                os << n << " " << o.name << " " << o.homology[n].to_string() << "\n";
    } else if (job.format == "table") {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"degree"});
        for (const PipelineOutput& o : outs) rows.back().push_back(o.name);
        for (int n = 0; n <= job.max_degree; ++n) {
            rows.push_back({std::to_string(n)});
            for (const PipelineOutput& o : outs) rows.back().push_back(o.homology[n].to_string());
        }
        std::vector<std::size_t> width(rows[0].size(), 0);
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << row[i];
                if (i + 1 < row.size())
                    os << std::string(width[i] - row[i].size() + 2, ' ');
            }
            os << "\n";
        }
        for (const std::string& f : failures) os << "disagreement: " << f << "\n";
        os << "verdict: " << (failures.empty() ? "PASS" : "FAIL") << "\n";
    } else {
        res.exit_code = 2;
        res.error = "input error: unknown format '" + job.format + "'\n";
        return res;
    }

    res.output = os.str();
    if (!failures.empty()) {
        res.exit_code = 1;
        if (job.format == "record")
            for (const std::string& f : failures) res.error += "disagreement: " + f + "\n";
    }
    return res;
}

}  // namespace eqhom::cli
