#ifndef GBFORGE_POLYMAT_HPP
#define GBFORGE_POLYMAT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gbforge/polynomial.hpp"

namespace gbforge {

// Dense matrix over R = K[x1..xr]. All entries share one ring; mixed-ring
// construction is rejected eagerly.
class PolyMatrix {
public:
    PolyMatrix(PolyRing ring, std::uint32_t rows, std::uint32_t cols); // zero matrix
    static PolyMatrix identity(const PolyRing& ring, std::uint32_t n);
    static PolyMatrix column(std::span<const Polynomial> entries); // m x 1

    const PolyRing& ring() const { return ring_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    const Polynomial& at(std::uint32_t i, std::uint32_t j) const;
    void set(std::uint32_t i, std::uint32_t j, Polynomial value);

    PolyMatrix operator+(const PolyMatrix& rhs) const;
    PolyMatrix operator-(const PolyMatrix& rhs) const;
    bool operator==(const PolyMatrix& rhs) const;
    bool is_zero() const;

    /// Max total degree over all entries; -infinity for the zero matrix.
    Degree max_degree() const;

private:
    void check_index(std::uint32_t i, std::uint32_t j) const;

    PolyRing ring_;
    std::uint32_t rows_, cols_;
    std::vector<Polynomial> cells_; // row-major
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination; exact over R.
Polynomial mat_det(const PolyMatrix& m);
/// Determinant by cofactor expansion; the independent cross-check route.
Polynomial mat_det_cofactor(const PolyMatrix& m);

PolyMatrix mat_adjugate(const PolyMatrix& m);
/// Inverse of a matrix whose determinant lies in K \ {0}; DomainError otherwise.
PolyMatrix inverse_constant_det(const PolyMatrix& m);
/// Inverse of an upper-triangular matrix with unit diagonal (back substitution).
PolyMatrix invert_upper_unitriangular(const PolyMatrix& u);
bool is_upper_unitriangular(const PolyMatrix& u);

// One elementary row operation, kept symbolic; the m x m matrix is built only
// on request. Indices are 0-based here and 1-based in serialized form.
class ElementaryOp {
public:
    enum class Kind { Permute, Scale, AddRow };

    static ElementaryOp permute(std::uint32_t size, std::uint32_t i, std::uint32_t j);
    static ElementaryOp scale(std::uint32_t size, std::uint32_t i, FieldElem c);
    /// row[target] += f * row[source]; target != source.
    static ElementaryOp add_row(std::uint32_t size, std::uint32_t target, std::uint32_t source,
                                Polynomial f);

    Kind kind() const { return kind_; }
    std::uint32_t size() const { return size_; }
    std::uint32_t index_i() const { return i_; }
    std::uint32_t index_j() const { return j_; }
    const FieldElem& scalar() const;
    const Polynomial& poly() const;

    FieldElem determinant(const FieldConfig& field) const; // -1, c, or 1
    PolyMatrix materialize(const PolyRing& ring) const;

private:
    ElementaryOp() = default;
    Kind kind_ = Kind::Permute;
    std::uint32_t size_ = 0;
    std::uint32_t i_ = 0, j_ = 0;
    std::optional<FieldElem> c_;
    std::optional<Polynomial> f_;
};

/// Left action of the op's matrix on M, in O(cols) polynomial operations.
PolyMatrix apply_elementary(const ElementaryOp& op, const PolyMatrix& m);
ElementaryOp inverse_of_elementary(const ElementaryOp& op);

/// A = (ops[0] * ... * ops[s-1]) * [E_n ; O].
PolyMatrix matrix_from_trace(std::span<const ElementaryOp> ops, std::uint32_t m, std::uint32_t n,
                             const PolyRing& ring);
/// B = (E_n | O) * U^-1 for U = ops[0] * ... * ops[s-1]; satisfies B*A = E_n.
PolyMatrix left_inverse_from_trace(std::span<const ElementaryOp> ops, std::uint32_t m,
                                   std::uint32_t n, const PolyRing& ring);

// Block view of a pair B in R^{n x m}, A in R^{m x n}:
// B = (B1 | B2), A = [A1 ; A2] with B1, A1 square of size n.
struct BlockSplit {
    PolyMatrix b1, b2, a1, a2;

    static BlockSplit of(const PolyMatrix& b, const PolyMatrix& a);
    PolyMatrix reassemble_b() const;
    PolyMatrix reassemble_a() const;
};

struct BruhatFactors {
    PolyMatrix a; // left regular, m x n
    PolyMatrix b; // certified left inverse, n x m, with b*a = E_n
};

/// A = U1 * S * [U2 ; O] and B = (U2^-1 | O) * S^-1 * U1^-1 for
/// upper-unitriangular U1 (m x m), U2 (n x n) and a permutation S given as an
/// index array: row i of S*M is row perm[i] of M.
BruhatFactors bruhat_compose(const PolyMatrix& u1, std::span<const std::uint32_t> perm,
                             const PolyMatrix& u2);

} // namespace gbforge

#endif
