#include "gbforge/shape.hpp"

#include "gbforge/errors.hpp"

namespace gbforge {

std::vector<Polynomial> ShapeBasis::generators() const {
    std::vector<Polynomial> out;
    out.reserve(n);
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        out.push_back(Polynomial::variable(ring, i) - tails[i]);
    out.push_back(last);
    return out;
}

ShapeBasis sample_shape_basis(std::uint32_t n, std::uint32_t d, const FieldConfig& field,
                              const CoeffDistribution& dist, std::uint64_t seed) {
    if (n < 1) throw ValidationError("sample_shape_basis: n must be >= 1");
    if (d < 1) throw ValidationError("sample_shape_basis: d must be >= 1");
    dist.validate(field);

    const PolyRing ring{n, field};
    const std::uint32_t xn = n - 1;
    Rng rng(seed);

    const auto sample_tail = [&]() {
        Polynomial h = Polynomial::zero(ring);
        for (std::uint32_t k = 0; k < d; ++k) {
            const FieldElem c = dist.sample(field, rng);
            if (c.is_zero()) continue;
            std::vector<std::uint32_t> exps(n, 0);
            exps[xn] = k;
            h += Polynomial::term(ring, Monomial(std::move(exps)), c);
        }
        return h;
    };

    std::vector<Polynomial> tails;
    for (std::uint32_t i = 0; i + 1 < n; ++i) tails.push_back(sample_tail());

    Polynomial gn = sample_tail();
    std::vector<std::uint32_t> top(n, 0);
    top[xn] = d;
    gn += Polynomial::term(ring, Monomial(std::move(top)), FieldElem::one(field));
    return ShapeBasis{ring, n, d, std::move(tails), std::move(gn)};
}

bool is_shape_position(std::span<const Polynomial> g) {
    if (g.empty()) return false;
    const PolyRing& ring = g.front().ring();
    const std::uint32_t n = static_cast<std::uint32_t>(g.size());
    if (ring.nvars != n) return false;
    for (const auto& p : g)
        if (!(p.ring() == ring)) return false;

    const std::uint32_t xn = n - 1;
    const Polynomial& gn = g.back();
    if (gn.is_zero()) return false;
    const Degree dd = gn.degree();
    if (dd.value_or(0) < 1) return false;
    const std::uint32_t d = static_cast<std::uint32_t>(dd.value());
    const auto vars = gn.variables_used();
    if (vars.size() != 1 || vars[0] != xn) return false;
    {
        std::vector<std::uint32_t> top(n, 0);
        top[xn] = d;
        if (!gn.coeff(Monomial(top)).is_one()) return false; // monic
    }

    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        const Polynomial& gi = g[i];
        if (!gi.coeff(Monomial::variable(n, i)).is_one()) return false;
        const Polynomial h = Polynomial::variable(ring, i) - gi; // h_i
        if (h.is_zero()) continue;
        const auto hvars = h.variables_used();
        if (!(hvars.empty() || (hvars.size() == 1 && hvars[0] == xn))) return false;
        if (!(h.degree() <= Degree::of(static_cast<std::int64_t>(d) - 1))) return false;
    }
    return true;
}

} // namespace gbforge
