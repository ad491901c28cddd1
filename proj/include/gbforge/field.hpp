#ifndef GBFORGE_FIELD_HPP
#define GBFORGE_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace gbforge {

enum class FieldKind { Rationals, PrimeField };

// The coefficient field K: either Q or F_p for a prime p. All arithmetic is
// exact; there is no floating point anywhere in the algebra layer.
struct FieldConfig {
    FieldKind kind = FieldKind::Rationals;
    std::int64_t modulus = 0; // set iff kind == PrimeField

    static FieldConfig rationals();
    /// Validates primality (deterministic Miller-Rabin, full 64-bit range).
    static FieldConfig prime_field(std::int64_t p);

    bool operator==(const FieldConfig&) const = default;
    std::string describe() const; // "Q" or "F_<p>"
};

bool is_prime_u64(std::uint64_t n);

// One element of K. Rationals are arbitrary-precision and always reduced
// (mpq canonical form); prime-field values are least non-negative residues.
class FieldElem {
public:
    FieldElem(); // rational zero

    static FieldElem zero(const FieldConfig& field);
    static FieldElem one(const FieldConfig& field);
    static FieldElem from_integer(const FieldConfig& field, std::int64_t value);
    static FieldElem rational(mpq_class value);
    static FieldElem rational(std::int64_t num, std::int64_t den);
    static FieldElem residue(std::int64_t value, std::int64_t p);
    /// Parses the coefficient grammar: [-]p[/q] over Q, [-]digits over F_p.
    static FieldElem parse(const FieldConfig& field, std::string_view text);

    FieldConfig field() const;
    bool is_zero() const;
    bool is_one() const;
    bool is_negative() const; // always false over F_p (residues)

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& rhs) const;
    FieldElem operator-(const FieldElem& rhs) const;
    FieldElem operator*(const FieldElem& rhs) const;
    FieldElem operator/(const FieldElem& rhs) const; // DomainError on zero divisor
    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);

    FieldElem inverse() const; // DomainError on zero
    FieldElem abs() const;

    bool operator==(const FieldElem& rhs) const;

    /// Canonical text: "p/q" or "p" over Q, the residue over F_p.
    std::string str() const;
    /// max(bits(num), bits(den)) over Q; bits of the residue over F_p. 0 for 0.
    std::uint64_t bit_length() const;

    const mpq_class& rat() const; // DomainError if not rational
    std::int64_t residue_value() const;

private:
    struct Fp {
        std::int64_t value; // in [0, p)
        std::int64_t p;
        bool operator==(const Fp&) const = default;
    };

    explicit FieldElem(mpq_class q);
    explicit FieldElem(Fp fp);
    void require_same_field(const FieldElem& rhs) const;

    std::variant<mpq_class, Fp> v_;
};

} // namespace gbforge

#endif
