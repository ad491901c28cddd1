#include "gbforge/division.hpp"

#include "gbforge/errors.hpp"

namespace gbforge {

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order) {
    if (divisors.empty()) throw DomainError("divide: empty divisor list");
    for (const auto& d : divisors) {
        if (d.is_zero()) throw DomainError("divide: zero divisor in list");
        if (!(d.ring() == f.ring()))
            throw RingMismatchError("divide: divisor ring differs from dividend ring");
    }

    std::vector<std::pair<Monomial, FieldElem>> lts;
    lts.reserve(divisors.size());
    for (const auto& d : divisors) lts.push_back(d.leading_term(order));

    DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial::zero(f.ring())),
                       Polynomial::zero(f.ring())};
    Polynomial p = f;
    while (!p.is_zero()) {
        const auto [lm, lc] = p.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!lts[i].first.divides(lm)) continue;
            const Monomial m = lm.divide_exact(lts[i].first);
            const FieldElem c = lc / lts[i].second;
            out.quotients[i] += Polynomial::term(f.ring(), m, c);
            p -= divisors[i].times_term(m, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            const Polynomial t = Polynomial::term(f.ring(), lm, lc);
            out.remainder += t;
            p -= t;
        }
    }
    return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
    return divide(f, divisors, order).remainder;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw DomainError("divide_exact: zero divisor");
    if (f.is_zero()) return Polynomial::zero(f.ring());
    const Polynomial gs[] = {g};
    DivisionResult res = divide(f, gs, MonomialOrder::lex());
    if (!res.remainder.is_zero()) throw DomainError("divide_exact: division is not exact");
    return res.quotients[0];
}

bool divides_poly(const Polynomial& g, const Polynomial& f) {
    if (g.is_zero()) throw DomainError("divides_poly: zero divisor");
    if (f.is_zero()) return true;
    const Polynomial gs[] = {g};
    return divide(f, gs, MonomialOrder::lex()).remainder.is_zero();
}

} // namespace gbforge
