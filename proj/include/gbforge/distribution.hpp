#ifndef GBFORGE_DISTRIBUTION_HPP
#define GBFORGE_DISTRIBUTION_HPP

#include "gbforge/field.hpp"
#include "gbforge/polynomial.hpp"
#include "gbforge/rng.hpp"

namespace gbforge {

// How random coefficients are drawn. zero_weight is the probability of an
// exact zero, mixed in before the kind-specific draw.
struct CoeffDistribution {
    enum class Kind { UniformIntBox, UniformRational, UniformFieldElement };

    Kind kind = Kind::UniformIntBox;
    std::int64_t lo = -5, hi = 5;             // UniformIntBox
    std::int64_t num_lo = -5, num_hi = 5;     // UniformRational numerator box
    std::int64_t den_lo = 1, den_hi = 5;      // UniformRational denominator box
    double zero_weight = 0.3;

    static CoeffDistribution uniform_int(std::int64_t lo, std::int64_t hi, double zero_weight);
    static CoeffDistribution uniform_rational(std::int64_t num_lo, std::int64_t num_hi,
                                              std::int64_t den_lo, std::int64_t den_hi,
                                              double zero_weight);
    static CoeffDistribution uniform_field(double zero_weight);
    static CoeffDistribution default_for(const FieldConfig& field);

    void validate(const FieldConfig& field) const;

    FieldElem sample(const FieldConfig& field, Rng& rng) const;
    /// Kind-specific draw with rejection of zero (zero_weight ignored).
    FieldElem sample_nonzero(const FieldConfig& field, Rng& rng) const;
};

/// Draws a coefficient for every monomial of total degree <= max_degree, i.e.
/// a uniform-ish element of R_{<=D} under the distribution.
Polynomial random_polynomial(const PolyRing& ring, std::uint32_t max_degree,
                             const CoeffDistribution& dist, Rng& rng);
Polynomial random_nonzero_polynomial(const PolyRing& ring, std::uint32_t max_degree,
                                     const CoeffDistribution& dist, Rng& rng);

} // namespace gbforge

#endif
