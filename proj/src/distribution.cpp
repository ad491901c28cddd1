#include "gbforge/distribution.hpp"

#include "gbforge/errors.hpp"

namespace gbforge {

CoeffDistribution CoeffDistribution::uniform_int(std::int64_t lo, std::int64_t hi,
                                                 double zero_weight) {
    CoeffDistribution d;
    d.kind = Kind::UniformIntBox;
    d.lo = lo;
    d.hi = hi;
    d.zero_weight = zero_weight;
    return d;
}

CoeffDistribution CoeffDistribution::uniform_rational(std::int64_t num_lo, std::int64_t num_hi,
                                                      std::int64_t den_lo, std::int64_t den_hi,
                                                      double zero_weight) {
    CoeffDistribution d;
    d.kind = Kind::UniformRational;
    d.num_lo = num_lo;
    d.num_hi = num_hi;
    d.den_lo = den_lo;
    d.den_hi = den_hi;
    d.zero_weight = zero_weight;
    return d;
}

CoeffDistribution CoeffDistribution::uniform_field(double zero_weight) {
    CoeffDistribution d;
    d.kind = Kind::UniformFieldElement;
    d.zero_weight = zero_weight;
    return d;
}

CoeffDistribution CoeffDistribution::default_for(const FieldConfig& field) {
    if (field.kind == FieldKind::Rationals) return uniform_int(-5, 5, 0.3);
    return uniform_field(0.3);
}

void CoeffDistribution::validate(const FieldConfig& field) const {
    if (zero_weight < 0.0 || zero_weight > 1.0)
        throw ValidationError("coeff_dist.zero_weight must lie in [0, 1]");
    switch (kind) {
        case Kind::UniformIntBox:
            if (lo > hi) throw ValidationError("coeff_dist: lo must be <= hi");
            break;
        case Kind::UniformRational:
            if (field.kind != FieldKind::Rationals)
                throw ValidationError("coeff_dist: uniform_rational requires the rational field");
            if (num_lo > num_hi) throw ValidationError("coeff_dist: num_lo must be <= num_hi");
            if (den_lo > den_hi) throw ValidationError("coeff_dist: den_lo must be <= den_hi");
            if (den_lo <= 0 && den_hi >= 0 && den_lo == den_hi)
                throw ValidationError("coeff_dist: denominator box is exactly {0}");
            break;
        case Kind::UniformFieldElement:
            if (field.kind != FieldKind::PrimeField)
                throw ValidationError("coeff_dist: uniform_field requires a prime field");
            break;
    }
}

FieldElem CoeffDistribution::sample(const FieldConfig& field, Rng& rng) const {
    if (rng.bernoulli(zero_weight)) return FieldElem::zero(field);
    switch (kind) {
        case Kind::UniformIntBox:
            return FieldElem::from_integer(field, rng.int_in(lo, hi));
        case Kind::UniformRational: {
            const std::int64_t num = rng.int_in(num_lo, num_hi);
            std::int64_t den = 0;
            do {
                den = rng.int_in(den_lo, den_hi);
            } while (den == 0);
            return FieldElem::rational(num, den);
        }
        case Kind::UniformFieldElement:
            return FieldElem::from_integer(
                field, static_cast<std::int64_t>(rng.below(
                           static_cast<std::uint64_t>(field.modulus))));
    }
    throw DomainError("unreachable");
}

FieldElem CoeffDistribution::sample_nonzero(const FieldConfig& field, Rng& rng) const {
    CoeffDistribution no_zero = *this;
    no_zero.zero_weight = 0.0;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FieldElem c = no_zero.sample(field, rng);
        if (!c.is_zero()) return c;
    }
    throw DomainError("sample_nonzero: distribution cannot produce a nonzero element");
}

Polynomial random_polynomial(const PolyRing& ring, std::uint32_t max_degree,
                             const CoeffDistribution& dist, Rng& rng) {
    Polynomial out = Polynomial::zero(ring);
    for (const Monomial& mono : monomials_upto(ring.nvars, max_degree)) {
        const FieldElem c = dist.sample(ring.field, rng);
        if (!c.is_zero()) out += Polynomial::term(ring, mono, c);
    }
    return out;
}

Polynomial random_nonzero_polynomial(const PolyRing& ring, std::uint32_t max_degree,
                                     const CoeffDistribution& dist, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Polynomial p = random_polynomial(ring, max_degree, dist, rng);
        if (!p.is_zero()) return p;
    }
    throw DomainError("random_nonzero_polynomial: distribution cannot produce a nonzero value");
}

} // namespace gbforge
