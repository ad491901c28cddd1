#ifndef GBFORGE_DENSITY_HPP
#define GBFORGE_DENSITY_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "gbforge/distribution.hpp"
#include "gbforge/polymat.hpp"

namespace gbforge {

// A pair (B, A) witnessing that F = A G generates <G>: (B A - E_n) G = O.
struct WitnessPoint {
    PolyMatrix b; // n x m
    PolyMatrix a; // m x n
    std::int64_t degree_bound = 0;
};

/// True iff W G = O, i.e. every row of W is a syzygy of G.
bool syzygy_check(const PolyMatrix& w, std::span<const Polynomial> g);

/// True iff (B A - E_n) G = O.
bool witness_holds(const PolyMatrix& b, const PolyMatrix& a, std::span<const Polynomial> g);

struct OracleResult {
    enum class Verdict { Irreducible, Reducible, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<Polynomial> factor; // non-constant exact divisor when Reducible
    std::uint64_t candidates_tried = 0;
    bool exhaustive = false; // the full candidate space was searched
};

// Bounded exhaustive irreducibility test. Over Q: univariate only --
// rational-root scan plus an integer-coefficient factor search of degree
// <= deg/2 inside Mignotte-style bounds (exact for degree <= 4, and whenever
// the search completes within budget). Over F_p: exhaustive factor
// enumeration for <= 2 used variables and total degree <= 4. Anything else
// comes back Unknown; constants and zero are a DomainError.
OracleResult irreducible_oracle(const Polynomial& f, std::uint64_t budget);

enum class MembershipVerdict { InF0ViaB1, InF0ViaA1, Inconclusive };

struct MembershipResult {
    MembershipVerdict verdict = MembershipVerdict::Inconclusive;
    bool hypothesis_violated = false; // matrix size n < 3
    Polynomial det_b1a1;
    OracleResult oracle;
    bool det_constant = false;
    // Materialized from the per-case construction:
    // via B1: A' = [B1^-1 (E_n - B2 A2) ; A2], with B A' = E_n and A' G = A G.
    // via A1: B' = (A1^-1 | O), with B' A = E_n.
    std::optional<PolyMatrix> witness_a_prime;
    std::optional<PolyMatrix> witness_b_prime;
};

/// Decides F = A G in F_0 via the factorization det(E_n + W - B2 A2)
/// = det(B1) det(A1): when that determinant is certified irreducible (or is a
/// nonzero constant), one factor is a unit and the explicit one-sided inverse
/// is materialized and checked. Precondition (B A - E_n) G = O is enforced.
MembershipResult membership_by_irreducible_det(const PolyMatrix& b, const PolyMatrix& a,
                                               std::span<const Polynomial> g,
                                               std::uint64_t oracle_budget);

/// The explicit section C -> (B, A) with B A = E_n and B1 A1 = C; needs
/// m >= 2n. B = (E_n | E_n | O), A = [C ; E_n - C ; O].
WitnessPoint section_iota(const PolyMatrix& c, std::uint32_t m, std::int64_t degree_bound);

struct DetExperimentConfig {
    std::uint32_t n = 2;
    std::uint32_t r = 1;
    std::uint32_t degree_bound = 1;
    std::uint64_t trials = 1000;
    FieldConfig field;
    CoeffDistribution dist;
    std::uint64_t seed = 0;
    std::uint64_t oracle_budget = 200000;
    // Trials run on this many workers; per-trial seeds make the tally
    // independent of scheduling.
    std::uint32_t jobs = 1;
};

struct DetExperimentReport {
    DetExperimentConfig config;
    std::uint64_t irreducible = 0;
    std::uint64_t reducible = 0;
    std::uint64_t not_applicable = 0; // determinant zero or constant
    std::uint64_t unknown = 0;
    double irreducible_fraction = 0.0; // irreducible / trials
};

/// Samples C in R_{<=D}^{n x n}, takes det C, and tallies oracle verdicts.
/// Deterministic per seed; Unknown is tracked, never raised.
DetExperimentReport det_irreducibility_experiment(const DetExperimentConfig& cfg);

struct SectionRoundTripReport {
    std::uint64_t trials = 0;
    std::uint64_t passes = 0;
};

SectionRoundTripReport section_roundtrip_experiment(std::uint32_t n, std::uint32_t m,
                                                    std::uint32_t degree_bound,
                                                    std::uint64_t trials,
                                                    const FieldConfig& field,
                                                    const CoeffDistribution& dist,
                                                    std::uint64_t seed);

} // namespace gbforge

#endif
