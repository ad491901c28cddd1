#include "gbforge/field.hpp"

#include <cctype>

#include "gbforge/errors.hpp"

namespace gbforge {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((u128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::int64_t normalize_mod(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return r;
}

// Extended Euclid on (a, p) with gcd 1; returns a^-1 mod p.
std::int64_t invmod(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw DomainError("invmod: element not invertible");
    return normalize_mod(old_s, p);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic witness set for the full 64-bit range.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldConfig FieldConfig::rationals() {
    return FieldConfig{FieldKind::Rationals, 0};
}

FieldConfig FieldConfig::prime_field(std::int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw ValidationError("prime_field: modulus " + std::to_string(p) + " is not prime");
    return FieldConfig{FieldKind::PrimeField, p};
}

std::string FieldConfig::describe() const {
    if (kind == FieldKind::Rationals) return "Q";
    return "F_" + std::to_string(modulus);
}

FieldElem::FieldElem() : v_(mpq_class(0)) {}
FieldElem::FieldElem(mpq_class q) : v_(std::move(q)) {}
FieldElem::FieldElem(Fp fp) : v_(fp) {}

FieldElem FieldElem::zero(const FieldConfig& field) {
    return from_integer(field, 0);
}

FieldElem FieldElem::one(const FieldConfig& field) {
    return from_integer(field, 1);
}

FieldElem FieldElem::from_integer(const FieldConfig& field, std::int64_t value) {
    if (field.kind == FieldKind::Rationals) {
        mpq_class q;
        q = static_cast<long>(value);
        return FieldElem(std::move(q));
    }
    return FieldElem(Fp{normalize_mod(value, field.modulus), field.modulus});
}

FieldElem FieldElem::rational(mpq_class value) {
    value.canonicalize();
    return FieldElem(std::move(value));
}

FieldElem FieldElem::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational: zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return FieldElem(std::move(q));
}

FieldElem FieldElem::residue(std::int64_t value, std::int64_t p) {
    FieldConfig f = FieldConfig::prime_field(p);
    return from_integer(f, value);
}

FieldElem FieldElem::parse(const FieldConfig& field, std::string_view text) {
    if (text.empty()) throw ParseError("empty coefficient");
    bool negative = false;
    std::size_t pos = 0;
    if (text[pos] == '-') { negative = true; ++pos; }
    else if (text[pos] == '+') { ++pos; }
    const auto digits = [&](std::string& out) {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected digits in coefficient '" + std::string(text) + "'");
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out.push_back(text[pos++]);
    };
    std::string num;
    digits(num);
    std::string den;
    if (pos < text.size() && text[pos] == '/') {
        if (field.kind == FieldKind::PrimeField)
            throw ParseError("rational coefficient '" + std::string(text) + "' in a prime-field ring");
        ++pos;
        digits(den);
    }
    if (pos != text.size())
        throw ParseError("trailing characters in coefficient '" + std::string(text) + "'");

    if (field.kind == FieldKind::Rationals) {
        mpq_class q(num + (den.empty() ? "" : "/" + den));
        if (!den.empty() && mpz_sgn(q.get_den().get_mpz_t()) == 0)
            throw ParseError("zero denominator in coefficient '" + std::string(text) + "'");
        q.canonicalize();
        if (negative) q = -q;
        return FieldElem(std::move(q));
    }
    mpz_class z(num);
    mpz_class p(static_cast<long>(field.modulus));
    mpz_class r = z % p;
    std::int64_t v = static_cast<std::int64_t>(r.get_si());
    if (negative) v = -v;
    return from_integer(field, v);
}

FieldConfig FieldElem::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return FieldConfig::rationals();
    return FieldConfig{FieldKind::PrimeField, std::get<Fp>(v_).p};
}

bool FieldElem::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return mpq_sgn(q->get_mpq_t()) == 0;
    return std::get<Fp>(v_).value == 0;
}

bool FieldElem::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    return std::get<Fp>(v_).value == 1;
}

bool FieldElem::is_negative() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return mpq_sgn(q->get_mpq_t()) < 0;
    return false;
}

void FieldElem::require_same_field(const FieldElem& rhs) const {
    if (v_.index() != rhs.v_.index())
        throw RingMismatchError("coefficient field mismatch: " + field().describe() + " vs " +
                                rhs.field().describe());
    if (const auto* fp = std::get_if<Fp>(&v_)) {
        if (fp->p != std::get<Fp>(rhs.v_).p)
            throw RingMismatchError("prime-field modulus mismatch: " + std::to_string(fp->p) +
                                    " vs " + std::to_string(std::get<Fp>(rhs.v_).p));
    }
}

FieldElem FieldElem::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return FieldElem(mpq_class(-*q));
    const Fp& fp = std::get<Fp>(v_);
    return FieldElem(Fp{fp.value == 0 ? 0 : fp.p - fp.value, fp.p});
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
    require_same_field(rhs);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return FieldElem(mpq_class(*q + std::get<mpq_class>(rhs.v_)));
    const Fp& a = std::get<Fp>(v_);
    const Fp& b = std::get<Fp>(rhs.v_);
    std::int64_t s = a.value + b.value;
    if (s >= a.p) s -= a.p;
    return FieldElem(Fp{s, a.p});
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const {
    return *this + (-rhs);
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
    require_same_field(rhs);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return FieldElem(mpq_class(*q * std::get<mpq_class>(rhs.v_)));
    const Fp& a = std::get<Fp>(v_);
    const Fp& b = std::get<Fp>(rhs.v_);
    const std::int64_t prod = static_cast<std::int64_t>(
        (u128)static_cast<std::uint64_t>(a.value) * static_cast<std::uint64_t>(b.value) %
        static_cast<std::uint64_t>(a.p));
    return FieldElem(Fp{prod, a.p});
}

FieldElem FieldElem::operator/(const FieldElem& rhs) const {
    return *this * rhs.inverse();
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) { return *this = *this + rhs; }
FieldElem& FieldElem::operator-=(const FieldElem& rhs) { return *this = *this - rhs; }
FieldElem& FieldElem::operator*=(const FieldElem& rhs) { return *this = *this * rhs; }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero field element");
    if (const auto* q = std::get_if<mpq_class>(&v_)) return FieldElem(mpq_class(1 / *q));
    const Fp& fp = std::get<Fp>(v_);
    return FieldElem(Fp{invmod(fp.value, fp.p), fp.p});
}

FieldElem FieldElem::abs() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return FieldElem(mpq_class(::abs(*q)));
    return *this;
}

bool FieldElem::operator==(const FieldElem& rhs) const {
    if (v_.index() != rhs.v_.index()) return false;
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == std::get<mpq_class>(rhs.v_);
    return std::get<Fp>(v_) == std::get<Fp>(rhs.v_);
}

std::string FieldElem::str() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<Fp>(v_).value);
}

namespace {
std::uint64_t mpz_bits(const mpz_class& z) {
    if (mpz_sgn(z.get_mpz_t()) == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}
} // namespace

std::uint64_t FieldElem::bit_length() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        if (mpq_sgn(q->get_mpq_t()) == 0) return 0;
        return std::max(mpz_bits(q->get_num()), mpz_bits(q->get_den()));
    }
    const Fp& fp = std::get<Fp>(v_);
    if (fp.value == 0) return 0;
    std::uint64_t bits = 0;
    std::uint64_t v = static_cast<std::uint64_t>(fp.value);
    while (v) { ++bits; v >>= 1; }
    return bits;
}

const mpq_class& FieldElem::rat() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
    throw DomainError("rat(): element is not rational");
}

std::int64_t FieldElem::residue_value() const {
    if (const auto* fp = std::get_if<Fp>(&v_)) return fp->value;
    throw DomainError("residue_value(): element is not in a prime field");
}

} // namespace gbforge
