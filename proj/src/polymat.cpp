#include "gbforge/polymat.hpp"

#include <algorithm>
#include <string>

#include "gbforge/division.hpp"
#include "gbforge/errors.hpp"

namespace gbforge {

PolyMatrix::PolyMatrix(PolyRing ring, std::uint32_t rows, std::uint32_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    cells_.assign(static_cast<std::size_t>(rows) * cols, Polynomial::zero(ring_));
}

PolyMatrix PolyMatrix::identity(const PolyRing& ring, std::uint32_t n) {
    PolyMatrix m(ring, n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
    return m;
}

PolyMatrix PolyMatrix::column(std::span<const Polynomial> entries) {
    if (entries.empty()) throw DimensionError("column: empty entry list");
    PolyMatrix m(entries[0].ring(), static_cast<std::uint32_t>(entries.size()), 1);
    for (std::uint32_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

void PolyMatrix::check_index(std::uint32_t i, std::uint32_t j) const {
    if (i >= rows_ || j >= cols_)
        throw DimensionError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range for " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
}

const Polynomial& PolyMatrix::at(std::uint32_t i, std::uint32_t j) const {
    check_index(i, j);
    return cells_[static_cast<std::size_t>(i) * cols_ + j];
}

void PolyMatrix::set(std::uint32_t i, std::uint32_t j, Polynomial value) {
    check_index(i, j);
    if (!(value.ring() == ring_))
        throw RingMismatchError("matrix entry ring differs from matrix ring");
    cells_[static_cast<std::size_t>(i) * cols_ + j] = std::move(value);
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("matrix addition: shape mismatch");
    PolyMatrix out(ring_, rows_, cols_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j) + rhs.at(i, j));
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("matrix subtraction: shape mismatch");
    PolyMatrix out(ring_, rows_, cols_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j) - rhs.at(i, j));
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
    return ring_ == rhs.ring_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && cells_ == rhs.cells_;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

Degree PolyMatrix::max_degree() const {
    Degree best = Degree::neg_infinity();
    for (const auto& c : cells_) {
        const Degree d = c.degree();
        if (best < d) best = d;
    }
    return best;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (!(a.ring() == b.ring())) throw RingMismatchError("mat_mul: ring mismatch");
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()));
    PolyMatrix out(a.ring(), a.rows(), b.cols());
    for (std::uint32_t i = 0; i < a.rows(); ++i) {
        for (std::uint32_t j = 0; j < b.cols(); ++j) {
            Polynomial acc = Polynomial::zero(a.ring());
            for (std::uint32_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

namespace {
void require_square(const PolyMatrix& m, const char* what) {
    if (m.rows() != m.cols())
        throw DimensionError(std::string(what) + ": matrix is not square (" +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
}
} // namespace

Polynomial mat_det(const PolyMatrix& m) {
    require_square(m, "mat_det");
    const std::uint32_t n = m.rows();
    if (n == 1) return m.at(0, 0);

    // One-step fraction-free elimination: every intermediate entry is a minor
    // of the input, so the divisions below are exact over R.
    std::vector<std::vector<Polynomial>> w;
    w.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (std::uint32_t j = 0; j < n; ++j) row.push_back(m.at(i, j));
        w.push_back(std::move(row));
    }
    bool negate = false;
    Polynomial prev = Polynomial::constant(m.ring(), 1);
    for (std::uint32_t k = 0; k + 1 < n; ++k) {
        if (w[k][k].is_zero()) {
            std::uint32_t pivot = k + 1;
            while (pivot < n && w[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Polynomial::zero(m.ring());
            std::swap(w[k], w[pivot]);
            negate = !negate;
        }
        for (std::uint32_t i = k + 1; i < n; ++i) {
            for (std::uint32_t j = k + 1; j < n; ++j) {
                Polynomial num = w[i][j] * w[k][k] - w[i][k] * w[k][j];
                w[i][j] = divide_exact(num, prev);
            }
            w[i][k] = Polynomial::zero(m.ring());
        }
        prev = w[k][k];
    }
    Polynomial det = w[n - 1][n - 1];
    return negate ? -det : det;
}

namespace {
Polynomial det_cofactor_rec(const PolyMatrix& m, std::vector<std::uint32_t>& cols,
                            std::uint32_t row) {
    const std::uint32_t n = m.rows();
    if (row == n) return Polynomial::constant(m.ring(), 1);
    if (cols.size() == 1) return m.at(row, cols[0]);
    Polynomial acc = Polynomial::zero(m.ring());
    for (std::size_t pick = 0; pick < cols.size(); ++pick) {
        const std::uint32_t j = cols[pick];
        if (m.at(row, j).is_zero()) continue;
        std::vector<std::uint32_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != pick) rest.push_back(cols[t]);
        Polynomial sub = m.at(row, j) * det_cofactor_rec(m, rest, row + 1);
        if (pick % 2 == 1) sub = -sub;
        acc += sub;
    }
    return acc;
}
} // namespace

Polynomial mat_det_cofactor(const PolyMatrix& m) {
    require_square(m, "mat_det_cofactor");
    std::vector<std::uint32_t> cols(m.cols());
    for (std::uint32_t j = 0; j < m.cols(); ++j) cols[j] = j;
    return det_cofactor_rec(m, cols, 0);
}

PolyMatrix mat_adjugate(const PolyMatrix& m) {
    require_square(m, "mat_adjugate");
    const std::uint32_t n = m.rows();
    PolyMatrix adj(m.ring(), n, n);
    if (n == 1) {
        adj.set(0, 0, Polynomial::constant(m.ring(), 1));
        return adj;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            // adj[j][i] = (-1)^{i+j} * minor(i, j)
            PolyMatrix minor(m.ring(), n - 1, n - 1);
            for (std::uint32_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::uint32_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.set(mr, mc, m.at(r, c));
                    ++mc;
                }
                ++mr;
            }
            Polynomial cof = mat_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj.set(j, i, std::move(cof));
        }
    }
    return adj;
}

PolyMatrix inverse_constant_det(const PolyMatrix& m) {
    const Polynomial det = mat_det(m);
    if (det.is_zero() || !det.is_constant())
        throw DomainError("inverse_constant_det: determinant is not a nonzero constant");
    const FieldElem d = det.coeff(Monomial::one(m.ring().nvars));
    const PolyMatrix adj = mat_adjugate(m);
    PolyMatrix out(m.ring(), m.rows(), m.cols());
    const FieldElem inv = d.inverse();
    for (std::uint32_t i = 0; i < m.rows(); ++i)
        for (std::uint32_t j = 0; j < m.cols(); ++j) out.set(i, j, adj.at(i, j).scaled(inv));
    return out;
}

bool is_upper_unitriangular(const PolyMatrix& u) {
    if (u.rows() != u.cols()) return false;
    const Polynomial one = Polynomial::constant(u.ring(), 1);
    for (std::uint32_t i = 0; i < u.rows(); ++i) {
        if (!(u.at(i, i) == one)) return false;
        for (std::uint32_t j = 0; j < i; ++j)
            if (!u.at(i, j).is_zero()) return false;
    }
    return true;
}

PolyMatrix invert_upper_unitriangular(const PolyMatrix& u) {
    if (!is_upper_unitriangular(u))
        throw DomainError("invert_upper_unitriangular: matrix is not upper unitriangular");
    const std::uint32_t n = u.rows();
    PolyMatrix x = PolyMatrix::identity(u.ring(), n);
    // Solve U X = E bottom-up: row i of X is e_i - sum_{k>i} U[i][k] * row k of X.
    for (std::uint32_t i = n; i-- > 0;) {
        for (std::uint32_t k = i + 1; k < n; ++k) {
            if (u.at(i, k).is_zero()) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                x.set(i, j, x.at(i, j) - u.at(i, k) * x.at(k, j));
        }
    }
    return x;
}

ElementaryOp ElementaryOp::permute(std::uint32_t size, std::uint32_t i, std::uint32_t j) {
    if (i >= size || j >= size) throw DimensionError("permute: row index out of range");
    if (i == j) throw ValidationError("permute: rows must differ");
    ElementaryOp op;
    op.kind_ = Kind::Permute;
    op.size_ = size;
    op.i_ = std::min(i, j);
    op.j_ = std::max(i, j);
    return op;
}

ElementaryOp ElementaryOp::scale(std::uint32_t size, std::uint32_t i, FieldElem c) {
    if (i >= size) throw DimensionError("scale: row index out of range");
    if (c.is_zero()) throw ValidationError("scale: factor must be nonzero");
    ElementaryOp op;
    op.kind_ = Kind::Scale;
    op.size_ = size;
    op.i_ = i;
    op.c_ = std::move(c);
    return op;
}

ElementaryOp ElementaryOp::add_row(std::uint32_t size, std::uint32_t target, std::uint32_t source,
                                   Polynomial f) {
    if (target >= size || source >= size) throw DimensionError("add_row: row index out of range");
    if (target == source) throw ValidationError("add_row: target and source must differ");
    ElementaryOp op;
    op.kind_ = Kind::AddRow;
    op.size_ = size;
    op.i_ = target;
    op.j_ = source;
    op.f_ = std::move(f);
    return op;
}

const FieldElem& ElementaryOp::scalar() const {
    if (!c_) throw DomainError("scalar(): op is not a row scaling");
    return *c_;
}

const Polynomial& ElementaryOp::poly() const {
    if (!f_) throw DomainError("poly(): op is not a row addition");
    return *f_;
}

FieldElem ElementaryOp::determinant(const FieldConfig& field) const {
    switch (kind_) {
        case Kind::Permute: return -FieldElem::one(field);
        case Kind::Scale: return *c_;
        case Kind::AddRow: return FieldElem::one(field);
    }
    throw DomainError("unreachable");
}

PolyMatrix ElementaryOp::materialize(const PolyRing& ring) const {
    PolyMatrix m = PolyMatrix::identity(ring, size_);
    switch (kind_) {
        case Kind::Permute:
            m.set(i_, i_, Polynomial::zero(ring));
            m.set(j_, j_, Polynomial::zero(ring));
            m.set(i_, j_, Polynomial::constant(ring, 1));
            m.set(j_, i_, Polynomial::constant(ring, 1));
            break;
        case Kind::Scale:
            m.set(i_, i_, Polynomial::constant(ring, *c_));
            break;
        case Kind::AddRow:
            m.set(i_, j_, *f_);
            break;
    }
    return m;
}

PolyMatrix apply_elementary(const ElementaryOp& op, const PolyMatrix& m) {
    if (op.size() != m.rows())
        throw DimensionError("apply_elementary: op size " + std::to_string(op.size()) +
                             " does not match matrix rows " + std::to_string(m.rows()));
    PolyMatrix out = m;
    switch (op.kind()) {
        case ElementaryOp::Kind::Permute:
            for (std::uint32_t j = 0; j < m.cols(); ++j) {
                Polynomial tmp = out.at(op.index_i(), j);
                out.set(op.index_i(), j, out.at(op.index_j(), j));
                out.set(op.index_j(), j, std::move(tmp));
            }
            break;
        case ElementaryOp::Kind::Scale:
            for (std::uint32_t j = 0; j < m.cols(); ++j)
                out.set(op.index_i(), j, out.at(op.index_i(), j).scaled(op.scalar()));
            break;
        case ElementaryOp::Kind::AddRow:
            if (!(op.poly().ring() == m.ring()))
                throw RingMismatchError("apply_elementary: row-addition polynomial ring mismatch");
            for (std::uint32_t j = 0; j < m.cols(); ++j)
                out.set(op.index_i(), j,
                        out.at(op.index_i(), j) + op.poly() * out.at(op.index_j(), j));
            break;
    }
    return out;
}

ElementaryOp inverse_of_elementary(const ElementaryOp& op) {
    switch (op.kind()) {
        case ElementaryOp::Kind::Permute: return op;
        case ElementaryOp::Kind::Scale:
            return ElementaryOp::scale(op.size(), op.index_i(), op.scalar().inverse());
        case ElementaryOp::Kind::AddRow:
            return ElementaryOp::add_row(op.size(), op.index_i(), op.index_j(), -op.poly());
    }
    throw DomainError("unreachable");
}

namespace {
PolyMatrix stacked_identity(const PolyRing& ring, std::uint32_t m, std::uint32_t n) {
    if (m < n) throw DimensionError("trace: m must be >= n");
    PolyMatrix out(ring, m, n);
    for (std::uint32_t i = 0; i < n; ++i) out.set(i, i, Polynomial::constant(ring, 1));
    return out;
}
} // namespace

PolyMatrix matrix_from_trace(std::span<const ElementaryOp> ops, std::uint32_t m, std::uint32_t n,
                             const PolyRing& ring) {
    PolyMatrix acc = stacked_identity(ring, m, n);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) acc = apply_elementary(*it, acc);
    return acc;
}

PolyMatrix left_inverse_from_trace(std::span<const ElementaryOp> ops, std::uint32_t m,
                                   std::uint32_t n, const PolyRing& ring) {
    if (m < n) throw DimensionError("left_inverse_from_trace: m must be >= n");
    PolyMatrix inv = PolyMatrix::identity(ring, m);
    for (const auto& op : ops) inv = apply_elementary(inverse_of_elementary(op), inv);
    PolyMatrix b(ring, n, m);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < m; ++j) b.set(i, j, inv.at(i, j));
    return b;
}

BlockSplit BlockSplit::of(const PolyMatrix& b, const PolyMatrix& a) {
    const std::uint32_t n = b.rows();
    const std::uint32_t m = b.cols();
    if (a.rows() != m || a.cols() != n)
        throw DimensionError("BlockSplit: B must be n x m and A must be m x n");
    if (m < n) throw DimensionError("BlockSplit: m must be >= n");
    if (m == n)
        throw DimensionError("BlockSplit: m must exceed n for a nonempty off block");
    const PolyRing& ring = b.ring();
    PolyMatrix b1(ring, n, n), b2(ring, n, m - n), a1(ring, n, n), a2(ring, m - n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            (j < n) ? b1.set(i, j, b.at(i, j)) : b2.set(i, j - n, b.at(i, j));
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            (i < n) ? a1.set(i, j, a.at(i, j)) : a2.set(i - n, j, a.at(i, j));
    return BlockSplit{std::move(b1), std::move(b2), std::move(a1), std::move(a2)};
}

PolyMatrix BlockSplit::reassemble_b() const {
    const std::uint32_t n = b1.rows();
    const std::uint32_t m = n + b2.cols();
    PolyMatrix b(b1.ring(), n, m);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) b.set(i, j, b1.at(i, j));
        for (std::uint32_t j = 0; j < b2.cols(); ++j) b.set(i, n + j, b2.at(i, j));
    }
    return b;
}

PolyMatrix BlockSplit::reassemble_a() const {
    const std::uint32_t n = a1.cols();
    const std::uint32_t m = n + a2.rows();
    PolyMatrix a(a1.ring(), m, n);
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 0; i < n; ++i) a.set(i, j, a1.at(i, j));
        for (std::uint32_t i = 0; i < a2.rows(); ++i) a.set(n + i, j, a2.at(i, j));
    }
    return a;
}

BruhatFactors bruhat_compose(const PolyMatrix& u1, std::span<const std::uint32_t> perm,
                             const PolyMatrix& u2) {
    if (!is_upper_unitriangular(u1) || !is_upper_unitriangular(u2))
        throw DomainError("bruhat_compose: factors must be upper unitriangular");
    if (!(u1.ring() == u2.ring())) throw RingMismatchError("bruhat_compose: ring mismatch");
    const std::uint32_t m = u1.rows();
    const std::uint32_t n = u2.rows();
    if (m < n) throw DimensionError("bruhat_compose: U1 size must be >= U2 size");
    if (perm.size() != m) throw DimensionError("bruhat_compose: permutation length must be m");
    std::vector<bool> seen(m, false);
    for (const std::uint32_t p : perm) {
        if (p >= m || seen[p]) throw ValidationError("bruhat_compose: not a permutation");
        seen[p] = true;
    }
    const PolyRing& ring = u1.ring();

    // A = U1 * S * [U2 ; O]
    PolyMatrix stacked(ring, m, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) stacked.set(i, j, u2.at(i, j));
    PolyMatrix permuted(ring, m, n);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < n; ++j) permuted.set(i, j, stacked.at(perm[i], j));
    PolyMatrix a = mat_mul(u1, permuted);

    // B = (U2^-1 | O) * S^-1 * U1^-1
    const PolyMatrix u2inv = invert_upper_unitriangular(u2);
    PolyMatrix left(ring, n, m);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) left.set(i, j, u2inv.at(i, j));
    PolyMatrix left_perm(ring, n, m); // (V * S^-1)[i][j] = V[i][perm[j]]
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < m; ++j) left_perm.set(i, j, left.at(i, perm[j]));
    PolyMatrix b = mat_mul(left_perm, invert_upper_unitriangular(u1));

    if (!(mat_mul(b, a) == PolyMatrix::identity(ring, n)))
        throw Error("bruhat_compose: internal left-inverse check failed");
    return BruhatFactors{std::move(a), std::move(b)};
}

} // namespace gbforge
