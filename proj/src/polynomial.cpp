#include "gbforge/polynomial.hpp"

#include <algorithm>

#include "gbforge/errors.hpp"

namespace gbforge {

std::string PolyRing::describe() const {
    return field.describe() + "[x1.." + "x" + std::to_string(nvars) + "]";
}

std::int64_t Degree::value() const {
    if (neg_inf_) throw DomainError("Degree::value on -infinity (zero polynomial)");
    return v_;
}

Polynomial::Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::zero(const PolyRing& ring) {
    return Polynomial(ring);
}

Polynomial Polynomial::constant(const PolyRing& ring, const FieldElem& c) {
    Polynomial p(ring);
    if (!c.is_zero()) {
        if (c.field() != ring.field)
            throw RingMismatchError("constant coefficient field does not match ring");
        p.terms_.emplace(Monomial::one(ring.nvars), c);
    }
    return p;
}

Polynomial Polynomial::constant(const PolyRing& ring, std::int64_t c) {
    return constant(ring, FieldElem::from_integer(ring.field, c));
}

Polynomial Polynomial::variable(const PolyRing& ring, std::uint32_t index) {
    return term(ring, Monomial::variable(ring.nvars, index), FieldElem::one(ring.field));
}

Polynomial Polynomial::term(const PolyRing& ring, Monomial mono, FieldElem c) {
    if (mono.nvars() != ring.nvars)
        throw DimensionError("term monomial has wrong variable count");
    Polynomial p(ring);
    if (!c.is_zero()) {
        if (c.field() != ring.field)
            throw RingMismatchError("term coefficient field does not match ring");
        p.terms_.emplace(std::move(mono), std::move(c));
    }
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.total_degree() == 0;
}

Degree Polynomial::degree() const {
    if (terms_.empty()) return Degree::neg_infinity();
    std::uint64_t best = 0;
    for (const auto& [mono, c] : terms_) best = std::max(best, mono.total_degree());
    return Degree::of(static_cast<std::int64_t>(best));
}

FieldElem Polynomial::coeff(const Monomial& mono) const {
    const auto it = terms_.find(mono);
    if (it == terms_.end()) return FieldElem::zero(ring_.field);
    return it->second;
}

void Polynomial::require_same_ring(const Polynomial& rhs) const {
    if (!(ring_ == rhs.ring_))
        throw RingMismatchError("polynomial ring mismatch: " + ring_.describe() + " vs " +
                                rhs.ring_.describe());
}

void Polynomial::add_term(const Monomial& mono, const FieldElem& c) {
    if (c.is_zero()) return;
    const auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_ring(rhs);
    Polynomial out = *this;
    for (const auto& [mono, c] : rhs.terms_) out.add_term(mono, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    require_same_ring(rhs);
    Polynomial out = *this;
    for (const auto& [mono, c] : rhs.terms_) out.add_term(mono, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_ring(rhs);
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_ring(rhs);
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_ring(rhs);
    Polynomial out(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    if (c.field() != ring_.field)
        throw RingMismatchError("scalar field does not match polynomial ring");
    Polynomial out(ring_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
}

Polynomial Polynomial::times_term(const Monomial& mono, const FieldElem& c) const {
    if (mono.nvars() != ring_.nvars)
        throw DimensionError("times_term monomial has wrong variable count");
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial out(ring_);
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m * mono, coeff * c);
    return out;
}

std::pair<Monomial, FieldElem> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (monomial_cmp(order, it->first, best->first) == Ordering::GT) best = it;
    }
    return {best->first, best->second};
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    const auto [mono, c] = leading_term(order);
    if (c.is_one()) return *this;
    return scaled(c.inverse());
}

std::optional<std::uint32_t> Polynomial::sole_variable() const {
    std::optional<std::uint32_t> var;
    for (const auto& [mono, c] : terms_) {
        for (std::uint32_t i = 0; i < mono.nvars(); ++i) {
            if (mono.exponent(i) == 0) continue;
            if (var && *var != i) return std::nullopt;
            var = i;
        }
    }
    return var;
}

std::vector<std::uint32_t> Polynomial::variables_used() const {
    std::vector<bool> used(ring_.nvars, false);
    for (const auto& [mono, c] : terms_)
        for (std::uint32_t i = 0; i < mono.nvars(); ++i)
            if (mono.exponent(i) > 0) used[i] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < used.size(); ++i)
        if (used[i]) out.push_back(i);
    return out;
}

std::vector<FieldElem> Polynomial::dense_univariate(std::uint32_t var) const {
    if (var >= ring_.nvars) throw DimensionError("dense_univariate: variable out of range");
    std::vector<FieldElem> coeffs(1, FieldElem::zero(ring_.field));
    for (const auto& [mono, c] : terms_) {
        for (std::uint32_t i = 0; i < mono.nvars(); ++i)
            if (i != var && mono.exponent(i) > 0)
                throw DomainError("dense_univariate: polynomial is not univariate in x" +
                                  std::to_string(var + 1));
        const std::uint32_t e = mono.exponent(var);
        if (coeffs.size() <= e) coeffs.resize(e + 1, FieldElem::zero(ring_.field));
        coeffs[e] = c;
    }
    return coeffs;
}

std::uint64_t Polynomial::max_coeff_bits() const {
    std::uint64_t best = 0;
    for (const auto& [mono, c] : terms_) best = std::max(best, c.bit_length());
    return best;
}

std::uint64_t monomial_count_upto(std::uint32_t nvars, std::uint32_t max_degree) {
    // N_D = sum_{d=0}^{D} C(r+d-1, d) monomials of degree exactly d, i.e.
    // C(r+D, D) in closed form; computed incrementally to stay in integers.
    std::uint64_t total = 0;
    std::uint64_t level = 1; // C(r-1+d, d) for d = 0
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
        total += level;
        level = level * (nvars + d) / (d + 1);
    }
    return total;
}

std::vector<Monomial> monomials_upto(std::uint32_t nvars, std::uint32_t max_degree) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(nvars, 0);
    // Odometer enumeration over exponent vectors with total degree <= D,
    // ascending in the rightmost-varying coordinate.
    const auto total = [&]() {
        std::uint64_t t = 0;
        for (auto e : exps) t += e;
        return t;
    };
    if (nvars == 0) {
        out.emplace_back(exps);
        return out;
    }
    for (;;) {
        out.emplace_back(exps);
        std::uint32_t i = nvars;
        for (;;) {
            if (i == 0) return out;
            --i;
            ++exps[i];
            if (total() <= max_degree) break;
            exps[i] = 0;
        }
    }
}

} // namespace gbforge
