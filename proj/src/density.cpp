#include "gbforge/density.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "gbforge/division.hpp"
#include "gbforge/errors.hpp"

namespace gbforge {

bool syzygy_check(const PolyMatrix& w, std::span<const Polynomial> g) {
    if (g.empty()) throw DomainError("syzygy_check: empty G");
    if (w.cols() != g.size())
        throw DimensionError("syzygy_check: W has " + std::to_string(w.cols()) +
                             " columns but |G| = " + std::to_string(g.size()));
    return mat_mul(w, PolyMatrix::column(g)).is_zero();
}

bool witness_holds(const PolyMatrix& b, const PolyMatrix& a, std::span<const Polynomial> g) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.size());
    if (b.rows() != n || a.cols() != n || b.cols() != a.rows())
        throw DimensionError("witness_holds: B must be n x m and A must be m x n");
    const PolyMatrix w = mat_mul(b, a) - PolyMatrix::identity(b.ring(), n);
    return syzygy_check(w, g);
}

namespace {

// ---- rational univariate machinery for the oracle ----------------------

struct IntPoly {
    std::vector<mpz_class> coeffs; // dense, coeffs.back() != 0
    std::uint32_t var = 0;
};

// Clears denominators and content; normalizes the leading sign to positive.
IntPoly primitive_integer_poly(const Polynomial& f, std::uint32_t var) {
    const std::vector<FieldElem> dense = f.dense_univariate(var);
    mpz_class den_lcm = 1;
    for (const auto& c : dense)
        if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                  c.rat().get_den().get_mpz_t());
    std::vector<mpz_class> coeffs;
    coeffs.reserve(dense.size());
    for (const auto& c : dense) {
        mpq_class scaled = c.is_zero() ? mpq_class(0) : c.rat() * mpq_class(den_lcm);
        coeffs.push_back(scaled.get_num()); // denominator is 1 after scaling
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    mpz_class content = 0;
    for (const auto& c : coeffs) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 0)
        for (auto& c : coeffs) c /= content;
    if (!coeffs.empty() && coeffs.back() < 0)
        for (auto& c : coeffs) c = -c;
    return IntPoly{std::move(coeffs), var};
}

std::optional<std::vector<mpz_class>> divisors_of(const mpz_class& value, std::uint64_t cap) {
    mpz_class a = ::abs(value);
    if (a == 0 || a > mpz_class("1000000000000")) return std::nullopt; // desk-scale limit
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        if (d * d != a) out.push_back(a / d);
        if (out.size() > cap) return std::nullopt;
    }
    std::sort(out.begin(), out.end());
    return out;
}

mpq_class eval_int_poly(const IntPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * x + mpq_class(p.coeffs[i]);
    return acc;
}

Polynomial int_poly_to_ring(const IntPoly& p, const PolyRing& ring) {
    Polynomial out = Polynomial::zero(ring);
    for (std::size_t e = 0; e < p.coeffs.size(); ++e) {
        if (p.coeffs[e] == 0) continue;
        std::vector<std::uint32_t> exps(ring.nvars, 0);
        exps[p.var] = static_cast<std::uint32_t>(e);
        out += Polynomial::term(ring, Monomial(std::move(exps)),
                                FieldElem::rational(mpq_class(p.coeffs[e])));
    }
    return out;
}

mpz_class binomial(std::uint32_t n, std::uint32_t k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class ceil_sqrt(const mpz_class& v) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    if (r * r < v) ++r;
    return r;
}

OracleResult oracle_rational_univariate(const Polynomial& f, std::uint32_t var,
                                        std::uint64_t budget) {
    OracleResult res;
    const IntPoly p = primitive_integer_poly(f, var);
    const std::size_t deg = p.coeffs.size() - 1;
    const PolyRing& ring = f.ring();

    if (deg == 1) {
        res.verdict = OracleResult::Verdict::Irreducible;
        res.exhaustive = true;
        return res;
    }
    if (p.coeffs[0] == 0) {
        res.verdict = OracleResult::Verdict::Reducible;
        res.factor = Polynomial::variable(ring, var);
        return res;
    }

    // Rational roots p/q with p | a0 and q | lead, both signs.
    const auto num_divs = divisors_of(p.coeffs[0], 4096);
    const auto den_divs = divisors_of(p.coeffs.back(), 4096);
    if (!num_divs || !den_divs) return res; // Unknown: constant term too big to factor
    for (const auto& den : *den_divs) {
        for (const auto& num : *num_divs) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1) continue;
            for (const int sign : {1, -1}) {
                if (++res.candidates_tried > budget) return res;
                const mpq_class root(sign > 0 ? num : mpz_class(-num), den);
                if (eval_int_poly(p, root) == 0) {
                    res.verdict = OracleResult::Verdict::Reducible;
                    IntPoly lin{{sign > 0 ? mpz_class(-num) : num, den}, var};
                    res.factor = int_poly_to_ring(lin, ring);
                    return res;
                }
            }
        }
    }
    if (deg <= 3) {
        res.verdict = OracleResult::Verdict::Irreducible;
        res.exhaustive = true;
        return res;
    }

    // Degree-k factor search, 2 <= k <= deg/2, inside Mignotte-style bounds:
    // |b_i| <= C(k-1, i) * ||f||_2 + C(k-1, i-1) * |lead(f)|.
    mpz_class norm_sq = 0;
    for (const auto& c : p.coeffs) norm_sq += c * c;
    const mpz_class norm2 = ceil_sqrt(norm_sq);
    const auto lead_divs = divisors_of(p.coeffs.back(), 4096);
    if (!lead_divs) return res;

    for (std::size_t k = 2; k <= deg / 2; ++k) {
        std::vector<mpz_class> bound(k); // bounds for b_1..b_{k-1} at indices 1..k-1
        for (std::size_t i = 1; i < k; ++i)
            bound[i] = binomial(static_cast<std::uint32_t>(k - 1), static_cast<std::uint32_t>(i)) *
                           norm2 +
                       binomial(static_cast<std::uint32_t>(k - 1),
                                static_cast<std::uint32_t>(i - 1)) *
                           ::abs(p.coeffs.back());
        for (const auto& lead : *lead_divs) {
            for (const auto& c0 : *num_divs) {
                for (const int sign0 : {1, -1}) {
                    // Odometer over the interior coefficients.
                    std::vector<mpz_class> mid(k);
                    for (std::size_t i = 1; i < k; ++i) mid[i] = -bound[i];
                    for (;;) {
                        if (++res.candidates_tried > budget) return res;
                        IntPoly cand{{}, var};
                        cand.coeffs.resize(k + 1);
                        cand.coeffs[0] = sign0 > 0 ? c0 : mpz_class(-c0);
                        for (std::size_t i = 1; i < k; ++i) cand.coeffs[i] = mid[i];
                        cand.coeffs[k] = lead;
                        const Polynomial candidate = int_poly_to_ring(cand, ring);
                        if (divides_poly(candidate, f)) {
                            res.verdict = OracleResult::Verdict::Reducible;
                            res.factor = candidate;
                            return res;
                        }
                        std::size_t i = 1;
                        while (i < k) {
                            if (mid[i] < bound[i]) { ++mid[i]; break; }
                            mid[i] = -bound[i];
                            ++i;
                        }
                        if (i == k) break;
                    }
                }
            }
        }
    }
    res.verdict = OracleResult::Verdict::Irreducible;
    res.exhaustive = true;
    return res;
}

// ---- prime-field exhaustive enumeration ---------------------------------

OracleResult oracle_prime_field(const Polynomial& f, std::uint64_t budget) {
    OracleResult res;
    const PolyRing& ring = f.ring();
    const std::vector<std::uint32_t> used = f.variables_used();
    const std::int64_t fdeg = f.degree().value();
    if (used.size() > 2 || fdeg > 4) return res; // Unknown: outside oracle capability

    // Candidates are normalized monic in degrevlex; enumerate by leading
    // monomial, filling every smaller monomial on the used variables.
    const MonomialOrder grl = MonomialOrder::degrevlex();
    const auto max_factor_deg = static_cast<std::uint32_t>(fdeg / 2);
    std::vector<Monomial> support_all;
    {
        // Monomials of the full ring restricted to the used variables.
        for (const Monomial& m : monomials_upto(static_cast<std::uint32_t>(used.size()),
                                                max_factor_deg)) {
            std::vector<std::uint32_t> exps(ring.nvars, 0);
            for (std::size_t i = 0; i < used.size(); ++i) exps[used[i]] = m.exponent(i);
            support_all.emplace_back(std::move(exps));
        }
    }
    const std::int64_t p = ring.field.modulus;

    for (const Monomial& lead : support_all) {
        if (lead.total_degree() == 0) continue;
        std::vector<Monomial> trailing;
        for (const Monomial& m : support_all)
            if (monomial_cmp(grl, m, lead) == Ordering::LT) trailing.push_back(m);
        std::vector<std::int64_t> coeff(trailing.size(), 0);
        for (;;) {
            if (++res.candidates_tried > budget) return res;
            Polynomial cand = Polynomial::term(ring, lead, FieldElem::one(ring.field));
            for (std::size_t i = 0; i < trailing.size(); ++i)
                if (coeff[i] != 0)
                    cand += Polynomial::term(ring, trailing[i],
                                             FieldElem::from_integer(ring.field, coeff[i]));
            // Candidates have degree <= deg/2 < deg f, so cand != f here.
            if (divides_poly(cand, f)) {
                res.verdict = OracleResult::Verdict::Reducible;
                res.factor = cand;
                return res;
            }
            std::size_t i = 0;
            while (i < coeff.size()) {
                if (coeff[i] + 1 < p) { ++coeff[i]; break; }
                coeff[i] = 0;
                ++i;
            }
            if (i == coeff.size()) break;
        }
    }
    res.verdict = OracleResult::Verdict::Irreducible;
    res.exhaustive = true;
    return res;
}

} // namespace

OracleResult irreducible_oracle(const Polynomial& f, std::uint64_t budget) {
    if (f.is_zero()) throw DomainError("irreducible_oracle: zero polynomial");
    if (f.is_constant()) throw DomainError("irreducible_oracle: constant polynomial");
    if (f.ring().field.kind == FieldKind::Rationals) {
        const auto var = f.sole_variable();
        if (!var) return OracleResult{}; // multivariate over Q: Unknown
        return oracle_rational_univariate(f, *var, budget);
    }
    return oracle_prime_field(f, budget);
}

namespace {

// B2 A2 as an n x n matrix; zero when m == n (the off blocks are empty).
PolyMatrix off_block_product(const PolyMatrix& b, const PolyMatrix& a, std::uint32_t n) {
    if (b.cols() == n) return PolyMatrix(b.ring(), n, n);
    const BlockSplit blocks = BlockSplit::of(b, a);
    return mat_mul(blocks.b2, blocks.a2);
}

} // namespace

MembershipResult membership_by_irreducible_det(const PolyMatrix& b, const PolyMatrix& a,
                                               std::span<const Polynomial> g,
                                               std::uint64_t oracle_budget) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.size());
    if (n == 0) throw DomainError("membership: empty G");
    if (b.rows() != n || a.cols() != n || b.cols() != a.rows() || b.cols() < n)
        throw DimensionError("membership: B must be n x m and A must be m x n with m >= n");
    const std::uint32_t m = b.cols();
    const PolyRing& ring = b.ring();
    const PolyMatrix identity = PolyMatrix::identity(ring, n);

    const PolyMatrix w = mat_mul(b, a) - identity;
    if (!syzygy_check(w, g))
        throw DomainError("membership: precondition (BA - E_n)G = O fails");

    const PolyMatrix b2a2 = off_block_product(b, a, n);
    const PolyMatrix examined = identity + w - b2a2; // equals B1 A1

    MembershipResult res{MembershipVerdict::Inconclusive, n < 3, mat_det(examined),
                         OracleResult{}, false, std::nullopt, std::nullopt};

    PolyMatrix b1(ring, n, n), a1(ring, n, n), a2_or_empty(ring, 1, 1);
    bool have_a2 = false;
    if (m > n) {
        const BlockSplit blocks = BlockSplit::of(b, a);
        b1 = blocks.b1;
        a1 = blocks.a1;
        a2_or_empty = blocks.a2;
        have_a2 = true;
        if (!(examined == mat_mul(b1, a1)))
            throw Error("membership: internal identity E_n + W - B2 A2 = B1 A1 failed");
    } else {
        b1 = b;
        a1 = a;
    }

    const Polynomial det_b1 = mat_det(b1);
    const Polynomial det_a1 = mat_det(a1);
    if (!(res.det_b1a1 == det_b1 * det_a1))
        throw Error("membership: det multiplicativity check failed");

    if (res.det_b1a1.is_zero()) return res;

    bool certified = false;
    if (res.det_b1a1.is_constant()) {
        res.det_constant = true;
        certified = true; // both factors are then nonzero constants
    } else {
        res.oracle = irreducible_oracle(res.det_b1a1, oracle_budget);
        certified = res.oracle.verdict == OracleResult::Verdict::Irreducible;
    }
    if (!certified) return res;

    const bool b1_unit = det_b1.is_constant() && !det_b1.is_zero();
    const bool a1_unit = det_a1.is_constant() && !det_a1.is_zero();
    if (!b1_unit && !a1_unit)
        throw Error("membership: certified irreducible determinant but neither factor is a unit");

    if (b1_unit) {
        const PolyMatrix b1_inv = inverse_constant_det(b1);
        const PolyMatrix top = mat_mul(b1_inv, identity - b2a2);
        PolyMatrix a_prime(ring, m, n);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) a_prime.set(i, j, top.at(i, j));
        if (have_a2)
            for (std::uint32_t i = 0; i + n < m; ++i)
                for (std::uint32_t j = 0; j < n; ++j)
                    a_prime.set(n + i, j, a2_or_empty.at(i, j));
        if (!(mat_mul(b, a_prime) == identity))
            throw VerificationError("membership: constructed A' fails B A' = E_n");
        const PolyMatrix gcol = PolyMatrix::column(g);
        if (!(mat_mul(a_prime, gcol) == mat_mul(a, gcol)))
            throw VerificationError("membership: constructed A' fails A' G = A G");
        res.verdict = MembershipVerdict::InF0ViaB1;
        res.witness_a_prime = std::move(a_prime);
        return res;
    }

    const PolyMatrix a1_inv = inverse_constant_det(a1);
    PolyMatrix b_prime(ring, n, m);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) b_prime.set(i, j, a1_inv.at(i, j));
    if (!(mat_mul(b_prime, a) == identity))
        throw VerificationError("membership: constructed B' fails B' A = E_n");
    res.verdict = MembershipVerdict::InF0ViaA1;
    res.witness_b_prime = std::move(b_prime);
    return res;
}

WitnessPoint section_iota(const PolyMatrix& c, std::uint32_t m, std::int64_t degree_bound) {
    if (c.rows() != c.cols()) throw DimensionError("section_iota: C must be square");
    const std::uint32_t n = c.rows();
    if (m < 2 * n) throw DimensionError("section_iota: m >= 2n required");
    if (!(c.max_degree() <= Degree::of(degree_bound)))
        throw DomainError("section_iota: C exceeds the stated degree bound");
    const PolyRing& ring = c.ring();
    const Polynomial one = Polynomial::constant(ring, 1);

    PolyMatrix b(ring, n, m);
    for (std::uint32_t i = 0; i < n; ++i) {
        b.set(i, i, one);
        b.set(i, n + i, one);
    }
    PolyMatrix a(ring, m, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            a.set(i, j, c.at(i, j));
            Polynomial e = (i == j) ? one : Polynomial::zero(ring);
            a.set(n + i, j, e - c.at(i, j));
        }

    if (!(mat_mul(b, a) == PolyMatrix::identity(ring, n)))
        throw Error("section_iota: internal B A = E_n check failed");
    const BlockSplit blocks = BlockSplit::of(b, a);
    if (!(mat_mul(blocks.b1, blocks.a1) == c))
        throw Error("section_iota: internal round trip B1 A1 = C failed");
    return WitnessPoint{std::move(b), std::move(a), degree_bound};
}

DetExperimentReport det_irreducibility_experiment(const DetExperimentConfig& cfg) {
    if (cfg.n < 1 || cfg.r < 1)
        throw ValidationError("det_irreducibility_experiment: n and r must be >= 1");
    if (cfg.trials < 1) throw ValidationError("det_irreducibility_experiment: trials must be >= 1");
    cfg.dist.validate(cfg.field);
    const PolyRing ring{cfg.r, cfg.field};

    struct Tally {
        std::uint64_t irreducible = 0, reducible = 0, not_applicable = 0, unknown = 0;
    };
    const auto run_trial = [&](std::uint64_t t, Tally& tally) {
        Rng rng(derive_seed(cfg.seed, t));
        PolyMatrix c(ring, cfg.n, cfg.n);
        for (std::uint32_t i = 0; i < cfg.n; ++i)
            for (std::uint32_t j = 0; j < cfg.n; ++j)
                c.set(i, j, random_polynomial(ring, cfg.degree_bound, cfg.dist, rng));
        const Polynomial det = mat_det(c);
        if (det.is_zero() || det.is_constant()) {
            ++tally.not_applicable;
            return;
        }
        switch (irreducible_oracle(det, cfg.oracle_budget).verdict) {
            case OracleResult::Verdict::Irreducible: ++tally.irreducible; break;
            case OracleResult::Verdict::Reducible: ++tally.reducible; break;
            case OracleResult::Verdict::Unknown: ++tally.unknown; break;
        }
    };

    Tally total;
    const std::uint32_t jobs =
        std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::min<std::uint64_t>(
                                       cfg.jobs, cfg.trials)));
    if (jobs == 1) {
        for (std::uint64_t t = 0; t < cfg.trials; ++t) run_trial(t, total);
    } else {
        // Counts only, so aggregation over workers is order-independent.
        std::vector<Tally> per_worker(jobs);
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> workers;
        for (std::uint32_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (;;) {
                    const std::uint64_t t = next.fetch_add(1);
                    if (t >= cfg.trials) return;
                    run_trial(t, per_worker[w]);
                }
            });
        }
        for (auto& th : workers) th.join();
        for (const Tally& tally : per_worker) {
            total.irreducible += tally.irreducible;
            total.reducible += tally.reducible;
            total.not_applicable += tally.not_applicable;
            total.unknown += tally.unknown;
        }
    }

    DetExperimentReport report;
    report.config = cfg;
    report.irreducible = total.irreducible;
    report.reducible = total.reducible;
    report.not_applicable = total.not_applicable;
    report.unknown = total.unknown;
    report.irreducible_fraction =
        static_cast<double>(report.irreducible) / static_cast<double>(cfg.trials);
    return report;
}

SectionRoundTripReport section_roundtrip_experiment(std::uint32_t n, std::uint32_t m,
                                                    std::uint32_t degree_bound,
                                                    std::uint64_t trials,
                                                    const FieldConfig& field,
                                                    const CoeffDistribution& dist,
                                                    std::uint64_t seed) {
    if (m < 2 * n) throw ValidationError("section_roundtrip: m >= 2n required");
    dist.validate(field);
    const PolyRing ring{n, field};
    SectionRoundTripReport report;
    report.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        PolyMatrix c(ring, n, n);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                c.set(i, j, random_polynomial(ring, degree_bound, dist, rng));
        const WitnessPoint wp = section_iota(c, m, degree_bound);
        const BlockSplit blocks = BlockSplit::of(wp.b, wp.a);
        const bool round_trip = mat_mul(blocks.b1, blocks.a1) == c;
        const bool left_inverse =
            mat_mul(wp.b, wp.a) == PolyMatrix::identity(ring, n);
        if (round_trip && left_inverse) ++report.passes;
    }
    return report;
}

} // namespace gbforge
