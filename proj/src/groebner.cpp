#include "gbforge/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "gbforge/errors.hpp"

namespace gbforge {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial: zero input");
    if (!(f.ring() == g.ring())) throw RingMismatchError("s_polynomial: ring mismatch");
    const auto [mf, cf] = f.leading_term(order);
    const auto [mg, cg] = g.leading_term(order);
    const Monomial l = Monomial::lcm(mf, mg);
    const Polynomial left = f.times_term(l.divide_exact(mf), cf.inverse());
    const Polynomial right = g.times_term(l.divide_exact(mg), cg.inverse());
    return left - right;
}

namespace {

struct Pair {
    std::uint64_t lcm_degree;
    std::uint32_t i, j;
    bool operator>(const Pair& rhs) const {
        if (lcm_degree != rhs.lcm_degree) return lcm_degree > rhs.lcm_degree;
        if (i != rhs.i) return i > rhs.i;
        return j > rhs.j;
    }
};

bool coprime_leading(const Monomial& a, const Monomial& b) {
    for (std::uint32_t k = 0; k < a.nvars(); ++k)
        if (a.exponent(k) > 0 && b.exponent(k) > 0) return false;
    return true;
}

// Reduces only the leading term until it is irreducible; enough for the
// completion loop, and much cheaper than a full normal form when tails are
// long. Full reduction happens once, in reduce_basis.
Polynomial top_reduce(Polynomial p, const std::vector<Polynomial>& basis,
                      const std::vector<Monomial>& lead, const MonomialOrder& order) {
    while (!p.is_zero()) {
        const auto [lm, lc] = p.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!lead[i].divides(lm)) continue;
            p -= basis[i].times_term(lm.divide_exact(lead[i]),
                                     lc / basis[i].leading_term(order).second);
            reduced = true;
            break;
        }
        if (!reduced) break;
    }
    return p;
}

} // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const BuchbergerOptions& opts) {
    if (gens.empty()) throw DomainError("buchberger: empty generator list");
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!basis.empty() && !(g.ring() == basis.front().ring()))
            throw RingMismatchError("buchberger: generators live in different rings");
        basis.push_back(g.monic(order));
    }
    if (basis.empty()) throw DomainError("buchberger: all generators are zero");

    std::vector<Monomial> lead;
    lead.reserve(basis.size());
    for (const auto& g : basis) lead.push_back(g.leading_term(order).first);

    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs;
    const auto push_pair = [&](std::uint32_t i, std::uint32_t j) {
        pairs.push(Pair{Monomial::lcm(lead[i], lead[j]).total_degree(), i, j});
    };
    for (std::uint32_t j = 1; j < basis.size(); ++j)
        for (std::uint32_t i = 0; i < j; ++i) push_pair(i, j);

    // Pairs already popped, for the chain criterion below.
    std::set<std::pair<std::uint32_t, std::uint32_t>> treated;
    const auto was_treated = [&](std::uint32_t a, std::uint32_t b) {
        return treated.contains({std::min(a, b), std::max(a, b)});
    };
    // (i, j) can be dropped when some lead[k] divides lcm(lead[i], lead[j])
    // and both (i, k) and (j, k) were popped earlier.
    const auto chain_redundant = [&](const Pair& pr) {
        const Monomial l = Monomial::lcm(lead[pr.i], lead[pr.j]);
        for (std::uint32_t k = 0; k < lead.size(); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (lead[k].divides(l) && was_treated(pr.i, k) && was_treated(pr.j, k)) return true;
        }
        return false;
    };

    std::uint64_t reductions = 0;
    while (!pairs.empty()) {
        const Pair pr = pairs.top();
        pairs.pop();
        treated.insert({pr.i, pr.j});
        if (coprime_leading(lead[pr.i], lead[pr.j])) continue;
        if (chain_redundant(pr)) continue;
        if (++reductions > opts.max_pairs)
            throw BudgetExceededError("buchberger: S-pair budget of " +
                                      std::to_string(opts.max_pairs) + " exceeded");
        const Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], order);
        if (s.is_zero()) continue;
        const Polynomial r = top_reduce(s, basis, lead, order);
        if (r.is_zero()) continue;
        basis.push_back(r.monic(order));
        lead.push_back(basis.back().leading_term(order).first);
        const std::uint32_t last = static_cast<std::uint32_t>(basis.size()) - 1;
        for (std::uint32_t i = 0; i < last; ++i) push_pair(i, last);
    }
    return GroebnerBasis{std::move(basis), order, false};
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
    const MonomialOrder& order = gb.order;
    std::vector<Polynomial> work;
    for (const auto& g : gb.generators) {
        if (g.is_zero()) continue;
        work.push_back(g.monic(order));
    }
    if (work.empty()) throw DomainError("reduce_basis: basis has no nonzero generators");

    // Autoreduce to a fixpoint: replace each generator by its normal form
    // against the others, dropping zeros. The ideal is preserved at every
    // step; for an input satisfying the Buchberger criterion the fixpoint is
    // the unique reduced basis.
    bool changed = true;
    std::size_t passes = 0;
    while (changed) {
        if (++passes > 10000) throw Error("reduce_basis: autoreduction did not stabilize");
        changed = false;
        for (std::size_t i = 0; i < work.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(work.size() - 1);
            for (std::size_t j = 0; j < work.size(); ++j)
                if (j != i) others.push_back(work[j]);
            if (others.empty()) break;
            Polynomial h = normal_form(work[i], std::span<const Polynomial>(others), order);
            if (h.is_zero()) {
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                --i;
                continue;
            }
            h = h.monic(order);
            if (!(h == work[i])) {
                work[i] = std::move(h);
                changed = true;
            }
        }
    }

    std::sort(work.begin(), work.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_cmp(order, a.leading_term(order).first, b.leading_term(order).first) ==
               Ordering::GT;
    });
    return GroebnerBasis{std::move(work), order, true};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, std::span<const Polynomial>(gb.generators), gb.order);
}

bool ideal_equal(std::span<const Polynomial> f, std::span<const Polynomial> g,
                 const MonomialOrder& order, const BuchbergerOptions& opts) {
    if (f.empty() || g.empty()) throw DomainError("ideal_equal: empty input system");
    if (!(f.front().ring() == g.front().ring()))
        throw RingMismatchError("ideal_equal: systems live in different rings");

    const GroebnerBasis rf = reduce_basis(buchberger(f, order, opts));
    const GroebnerBasis rg = reduce_basis(buchberger(g, order, opts));

    const bool canonical = rf.generators == rg.generators;

    bool inclusion = true;
    for (const auto& p : f)
        if (!p.is_zero() && !normal_form(p, rg).is_zero()) { inclusion = false; break; }
    if (inclusion)
        for (const auto& p : g)
            if (!p.is_zero() && !normal_form(p, rf).is_zero()) { inclusion = false; break; }

    if (canonical != inclusion)
        throw Error("ideal_equal: canonical-form and double-inclusion routes disagree");
    return canonical;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::uint64_t cap) {
    if (gb.generators.empty()) throw DomainError("standard_monomials: empty basis");
    const std::uint32_t nvars = gb.generators.front().ring().nvars;
    std::vector<Monomial> leads;
    for (const auto& g : gb.generators) {
        if (g.is_zero()) continue;
        leads.push_back(g.leading_term(gb.order).first);
    }
    const auto is_standard = [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m)) return false;
        return true;
    };

    std::vector<Monomial> out;
    std::set<Monomial, Monomial::KeyLess> seen;
    std::vector<Monomial> frontier{Monomial::one(nvars)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        const Monomial m = frontier.back();
        frontier.pop_back();
        if (!is_standard(m)) continue;
        out.push_back(m);
        if (out.size() > cap)
            throw BudgetExceededError("standard_monomials: more than " + std::to_string(cap) +
                                      " standard monomials; ideal not zero-dimensional?");
        for (std::uint32_t v = 0; v < nvars; ++v) {
            const Monomial child = m * Monomial::variable(nvars, v);
            if (seen.insert(child).second) frontier.push_back(child);
        }
    }
    return out;
}

} // namespace gbforge
