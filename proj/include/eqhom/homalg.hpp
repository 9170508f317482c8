#pragma once

// Exact integer linear algebra: matrices over arbitrary-precision integers,
// Smith normal form, finitely generated abelian groups by presentation,
// homomorphisms and chain complexes with homology.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqhom {

using Int = boost::multiprecision::cpp_int;

// Remainder in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Dense row-major integer matrix. Zero rows or columns are legal and denote
// empty blocks of zero maps.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    IntMatrix transpose() const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

// U * m * V = D with U, V unimodular and D diagonal with divisibility chain.
// U_inv and V_inv are maintained alongside so callers can change basis both ways.
struct SmithResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;
};

SmithResult smith_normal_form(const IntMatrix& m);

// Columns form a basis of the lattice { x : m x = 0 }.
IntMatrix kernel_lattice(const IntMatrix& m);

// Solves m * X = rhs over the integers; nullopt when no solution exists.
std::optional<IntMatrix> solve_matrix(const IntMatrix& m, const IntMatrix& rhs);

// Finitely generated abelian group in canonical form: Z^free_rank plus one
// cyclic factor per torsion coefficient, with the divisibility chain
// d_1 | d_2 | ... and every d_i >= 2. Canonical generators are ordered free
// part first, then torsion factors. Groups built from a presentation carry
// the change-of-basis maps between presentation and canonical generators.
class FgAbGroup {
public:
    FgAbGroup() = default;  // the zero group

    static FgAbGroup canonical(std::size_t free_rank, std::vector<Int> torsion);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    std::size_t gens() const { return free_rank_ + torsion_.size(); }
    bool is_zero() const { return gens() == 0; }

    // 0 for a free generator, the torsion coefficient otherwise.
    Int gen_order(std::size_t i) const;

    // gens x (#torsion) matrix whose columns generate the relation lattice.
    IntMatrix relation_matrix() const;

    // Reduces each torsion coordinate of the column vectors into [0, d).
    IntMatrix reduce_vectors(IntMatrix vecs) const;

    bool has_presentation() const { return pres_ != nullptr; }
    std::size_t presentation_gens() const;
    const IntMatrix& relations() const;        // rows are relations
    const IntMatrix& to_canonical() const;     // gens x presentation_gens
    const IntMatrix& from_canonical() const;   // presentation_gens x gens

    bool operator==(const FgAbGroup& o) const {
        return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
    }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    friend FgAbGroup group_from_presentation(const IntMatrix& rels, std::size_t generators);

    struct Presentation {
        IntMatrix relations;
        IntMatrix to_canonical;
        IntMatrix from_canonical;
    };

    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
    std::shared_ptr<const Presentation> pres_;
};

// Canonical form of Z^generators modulo the row span of rels.
FgAbGroup group_from_presentation(const IntMatrix& rels, std::size_t generators);

// Homomorphism between canonical forms; the matrix acts on column vectors of
// canonical coordinates (rows indexed by target generators). Construction
// rejects matrices that do not map relations into relations and normalizes
// torsion rows, so equal homs have equal matrices.
class AbHom {
public:
    AbHom() = default;  // zero -> zero
    AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static AbHom identity(const FgAbGroup& g);
    static AbHom zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    bool is_identity() const;
    bool is_zero_map() const { return matrix_.is_zero(); }

    bool operator==(const AbHom& o) const {
        return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
    }
    bool operator!=(const AbHom& o) const { return !(*this == o); }

private:
    FgAbGroup source_;
    FgAbGroup target_;
    IntMatrix matrix_;
};

AbHom hom_compose(const AbHom& g, const AbHom& f);  // g after f
AbHom hom_add(const AbHom& a, const AbHom& b);

// A hom given by its values on presentation generators of the source;
// verifies the source relations die in the target.
AbHom hom_from_presentation_gens(const FgAbGroup& source, const FgAbGroup& target,
                                 const IntMatrix& on_presentation_gens);

struct DirectSum {
    FgAbGroup group;
    std::vector<AbHom> inclusions;
    std::vector<AbHom> projections;
};

DirectSum group_direct_sum(const std::vector<FgAbGroup>& parts);
AbHom hom_direct_sum(const std::vector<AbHom>& parts);

// Chain complex concentrated in degrees 0..size()-1. Construction checks
// shapes and that consecutive differentials compose to zero.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::vector<FgAbGroup> groups, std::vector<AbHom> differentials);

    std::size_t size() const { return groups_.size(); }
    FgAbGroup group(std::size_t n) const;
    AbHom differential(std::size_t n) const;  // d_n : C_n -> C_{n-1}

private:
    std::vector<FgAbGroup> groups_;
    std::vector<AbHom> diffs_;  // diffs_[i] = d_{i+1}
};

// ker(d_n) / im(d_{n+1}) in canonical form, degrees outside the range treated
// as zero.
FgAbGroup homology_at(const ChainComplex& c, std::size_t n);

}  // namespace eqhom
