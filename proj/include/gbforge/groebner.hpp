#ifndef GBFORGE_GROEBNER_HPP
#define GBFORGE_GROEBNER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gbforge/division.hpp"
#include "gbforge/polynomial.hpp"

namespace gbforge {

struct GroebnerBasis {
    std::vector<Polynomial> generators;
    MonomialOrder order;
    bool reduced = false;
};

struct BuchbergerOptions {
    // Hard cap on S-pair reductions; BudgetExceededError beyond it rather
    // than an unbounded run.
    std::uint64_t max_pairs = 100000;
};

/// S(f,g) = (lcm/LT(f)) f - (lcm/LT(g)) g; leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger completion with the normal selection strategy (smallest lcm
/// degree first) and the coprime-leading-term skip criterion. Zero inputs are
/// dropped; an all-zero input is an error. Generators come out monic.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const BuchbergerOptions& opts = {});

/// Unique reduced basis of the same ideal: minimal, monic, tails fully
/// reduced, sorted by descending leading monomial. Idempotent.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Decides <F> = <G> two ways -- reduced-basis equality and mutual reduction
/// to zero -- and insists the routes agree.
bool ideal_equal(std::span<const Polynomial> f, std::span<const Polynomial> g,
                 const MonomialOrder& order, const BuchbergerOptions& opts = {});

/// Monomials not divisible by any leading monomial of the basis. Error if
/// more than `cap` exist (the ideal is then not zero-dimensional or too big).
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::uint64_t cap);

} // namespace gbforge

#endif
