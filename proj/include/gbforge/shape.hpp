#ifndef GBFORGE_SHAPE_HPP
#define GBFORGE_SHAPE_HPP

#include <span>
#include <vector>

#include "gbforge/distribution.hpp"
#include "gbforge/polynomial.hpp"

namespace gbforge {

// A lex basis (x1 - h1(xn), ..., x_{n-1} - h_{n-1}(xn), g_n(xn)) with g_n
// monic of degree d and every tail of degree <= d - 1. Such a tuple is
// automatically its own reduced lex basis: the leading monomials
// x1, ..., x_{n-1}, xn^d are pairwise coprime and no tail term is divisible
// by any of them.
struct ShapeBasis {
    PolyRing ring; // r = n
    std::uint32_t n;
    std::uint32_t d;
    std::vector<Polynomial> tails; // h_1..h_{n-1}, univariate in x_n
    Polynomial last;               // g_n

    std::vector<Polynomial> generators() const;
    /// n*d: d tail coefficients per generator.
    std::uint64_t free_coefficient_slots() const { return std::uint64_t{n} * d; }
};

/// Deterministic for a fixed seed. Draw order: h_1 coefficients by ascending
/// degree, then h_2, ..., then the tail of g_n.
ShapeBasis sample_shape_basis(std::uint32_t n, std::uint32_t d, const FieldConfig& field,
                              const CoeffDistribution& dist, std::uint64_t seed);

/// Structural check of the displayed form, degree constraints included.
bool is_shape_position(std::span<const Polynomial> g);

} // namespace gbforge

#endif
