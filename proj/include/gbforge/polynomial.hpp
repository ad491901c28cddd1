#ifndef GBFORGE_POLYNOMIAL_HPP
#define GBFORGE_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbforge/field.hpp"
#include "gbforge/monomial.hpp"

namespace gbforge {

// R = K[x1..xr].
struct PolyRing {
    std::uint32_t nvars = 0;
    FieldConfig field;

    bool operator==(const PolyRing&) const = default;
    std::string describe() const;
};

// Total degree with a -infinity value for the zero polynomial, so that
// deg(f*g) = deg f + deg g holds without special cases.
class Degree {
public:
    static Degree neg_infinity() { return Degree(true, 0); }
    static Degree of(std::int64_t v) { return Degree(false, v); }

    bool is_neg_infinity() const { return neg_inf_; }
    std::int64_t value() const; // DomainError if -infinity
    std::int64_t value_or(std::int64_t fallback) const { return neg_inf_ ? fallback : v_; }

    Degree operator+(const Degree& rhs) const {
        if (neg_inf_ || rhs.neg_inf_) return neg_infinity();
        return of(v_ + rhs.v_);
    }
    bool operator==(const Degree&) const = default;
    bool operator<(const Degree& rhs) const {
        if (neg_inf_) return !rhs.neg_inf_;
        if (rhs.neg_inf_) return false;
        return v_ < rhs.v_;
    }
    bool operator<=(const Degree& rhs) const { return *this < rhs || *this == rhs; }

private:
    Degree(bool neg_inf, std::int64_t v) : neg_inf_(neg_inf), v_(v) {}
    bool neg_inf_;
    std::int64_t v_;
};

// Sparse exact-coefficient multivariate polynomial. Terms never store a zero
// coefficient; the term map uses a structural key order, and the active
// monomial ordering is applied only where it matters (leading terms,
// serialization). Immutable in practice: operations return new values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, FieldElem, Monomial::KeyLess>;

    explicit Polynomial(PolyRing ring);
    static Polynomial zero(const PolyRing& ring);
    static Polynomial constant(const PolyRing& ring, const FieldElem& c);
    static Polynomial constant(const PolyRing& ring, std::int64_t c);
    static Polynomial variable(const PolyRing& ring, std::uint32_t index);
    static Polynomial term(const PolyRing& ring, Monomial mono, FieldElem c);

    const PolyRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_constant() const; // zero or a single degree-0 term
    Degree degree() const;

    /// Coefficient of a monomial; zero element of the field if absent.
    FieldElem coeff(const Monomial& mono) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);

    Polynomial scaled(const FieldElem& c) const;
    Polynomial times_term(const Monomial& mono, const FieldElem& c) const;

    /// Order-maximal (monomial, coefficient); DomainError on the zero polynomial.
    std::pair<Monomial, FieldElem> leading_term(const MonomialOrder& order) const;
    Polynomial monic(const MonomialOrder& order) const;

    bool operator==(const Polynomial& rhs) const {
        return ring_ == rhs.ring_ && terms_ == rhs.terms_;
    }

    /// The single variable this polynomial depends on, if exactly one.
    std::optional<std::uint32_t> sole_variable() const;
    std::vector<std::uint32_t> variables_used() const;
    /// Dense coefficients c0..cd in the given variable; DomainError if any
    /// other variable appears.
    std::vector<FieldElem> dense_univariate(std::uint32_t var) const;

    std::uint64_t max_coeff_bits() const;

private:
    void require_same_ring(const Polynomial& rhs) const;
    void add_term(const Monomial& mono, const FieldElem& c); // merges, prunes zero

    PolyRing ring_;
    TermMap terms_;
};

/// Number of monomials of total degree <= max_degree in nvars variables.
std::uint64_t monomial_count_upto(std::uint32_t nvars, std::uint32_t max_degree);
/// All such monomials, enumerated in a fixed deterministic order.
std::vector<Monomial> monomials_upto(std::uint32_t nvars, std::uint32_t max_degree);

} // namespace gbforge

#endif
