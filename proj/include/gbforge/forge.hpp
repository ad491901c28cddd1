#ifndef GBFORGE_FORGE_HPP
#define GBFORGE_FORGE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gbforge/distribution.hpp"
#include "gbforge/groebner.hpp"
#include "gbforge/polymat.hpp"
#include "gbforge/shape.hpp"

namespace gbforge {

enum class Backend { ElementaryProduct, Bruhat };

struct OpMix {
    double add_row = 0.6;
    double permute = 0.3;
    double scale = 0.1;
};

struct GenConfig {
    std::uint32_t n = 2;
    std::uint32_t m = 3;
    Backend backend = Backend::ElementaryProduct;
    // Step count s drawn uniformly from [s_min, s_max]. s_min = s_max = 0 is
    // a test hook producing F = (g_1..g_n, 0..0); the CLI enforces s_min >= 1.
    std::uint32_t s_min = 1;
    std::uint32_t s_max = 10;
    OpMix op_mix;
    std::uint32_t addrow_poly_degree_max = 1;
    std::int64_t degree_cap = 8;
    std::uint32_t max_op_retries = 20;
    std::uint32_t max_record_retries = 200;
    bool forbid_zero_rows = true;
    bool verify = true;
    CoeffDistribution coeff_dist;
    BuchbergerOptions verify_opts;

    void validate() const;
};

struct RecordStats {
    std::uint32_t steps = 0; // elementary ops applied; 0 for the Bruhat backend
    std::int64_t max_deg_f = -1;
    std::uint64_t max_coeff_bits = 0;
    bool verified = false;
};

struct BruhatTrace {
    PolyMatrix u1;
    std::vector<std::uint32_t> perm;
    PolyMatrix u2;
};

struct GenTrace {
    Backend backend = Backend::ElementaryProduct;
    std::vector<ElementaryOp> ops;      // ElementaryProduct: product order
    std::optional<BruhatTrace> bruhat;  // Bruhat backend only
};

struct DatasetRecord {
    std::uint64_t idx = 0;
    std::uint64_t seed = 0;
    std::vector<Polynomial> basis_g;
    std::vector<Polynomial> system_f;
    GenTrace trace;
    RecordStats stats;
};

/// F = (U_1 ... U_s) [E_n ; O] G, computed by row ops on the padded column.
/// Always checks the left-inverse witness B A = E_n and the reconstruction
/// F = A G from the trace; runs the basis-equality oracle iff cfg.verify.
DatasetRecord generate_record(std::span<const Polynomial> g, const GenConfig& cfg,
                              std::uint64_t record_seed);

/// Same contract with A = U1 S [U2 ; O] and B = (U2^-1 | O) S^-1 U1^-1.
DatasetRecord generate_record_bruhat(std::span<const Polynomial> g, const GenConfig& cfg,
                                     std::uint64_t record_seed);

struct ShapeConfig {
    std::uint32_t n = 2;
    std::uint32_t d_max = 5; // d drawn uniformly from [1, d_max]
};

struct DatasetSummary {
    std::uint64_t count = 0;
    std::uint64_t verified_count = 0;
    double pass_rate = 0.0;
    std::map<std::int64_t, std::uint64_t> degree_hist;     // of max_deg_f
    std::map<std::uint64_t, std::uint64_t> coeff_bits_hist; // of max_coeff_bits
};

using RecordSink = std::function<void(const DatasetRecord&)>;

/// Generates `count` records; the sink sees them in index order regardless of
/// worker scheduling, and output is bitwise-reproducible for a fixed
/// (config, master_seed).
DatasetSummary generate_dataset(std::uint64_t count, const GenConfig& cfg,
                                const ShapeConfig& shape_cfg, const FieldConfig& field,
                                std::uint64_t master_seed, const RecordSink& sink,
                                std::uint32_t jobs = 1);

struct CoverageGrowthReport {
    std::vector<std::uint32_t> s_max_values;
    std::vector<std::uint64_t> distinct_counts; // distinct canonicalized F per s_max
    std::uint64_t records_per_sweep = 0;
};

/// Distinct-output diagnostic: how many distinct F (as rendered tuples) a
/// fixed shape basis produces as the step budget grows.
CoverageGrowthReport coverage_growth_experiment(const GenConfig& base_cfg,
                                                const ShapeConfig& shape_cfg,
                                                const FieldConfig& field,
                                                std::span<const std::uint32_t> s_max_values,
                                                std::uint64_t records_per_sweep,
                                                std::uint64_t master_seed);

} // namespace gbforge

#endif
