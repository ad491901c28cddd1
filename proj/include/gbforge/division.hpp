#ifndef GBFORGE_DIVISION_HPP
#define GBFORGE_DIVISION_HPP

#include <span>
#include <vector>

#include "gbforge/polynomial.hpp"

namespace gbforge {

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division with remainder: f = sum q_i * d_i + r, where no
// monomial of r is divisible by any leading monomial of the divisors.
// Divisors are tried in list order; the first divisible leading term wins.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);

/// Exact quotient f / g; DomainError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// True iff g divides f in the polynomial ring (g nonzero).
bool divides_poly(const Polynomial& g, const Polynomial& f);

} // namespace gbforge

#endif
