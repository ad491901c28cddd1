#include "gbforge/forge.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "gbforge/errors.hpp"
#include "gbforge/poly_text.hpp"

namespace gbforge {

void GenConfig::validate() const {
    if (n < 1) throw ValidationError("gen.n must be >= 1");
    if (m < n) throw ValidationError("gen: m >= n required");
    if (s_min > s_max) throw ValidationError("gen.s_min must be <= gen.s_max");
    const double total = op_mix.add_row + op_mix.permute + op_mix.scale;
    if (op_mix.add_row < 0 || op_mix.permute < 0 || op_mix.scale < 0 ||
        std::abs(total - 1.0) > 1e-9)
        throw ValidationError("gen.op_mix probabilities must be non-negative and sum to 1");
    if (degree_cap < 0) throw ValidationError("gen.degree_cap must be >= 0");
    if (max_op_retries < 1) throw ValidationError("gen.max_op_retries must be >= 1");
    if (max_record_retries < 1) throw ValidationError("gen.max_record_retries must be >= 1");
}

namespace {

void require_valid_input(std::span<const Polynomial> g, const GenConfig& cfg) {
    cfg.validate();
    if (g.size() != cfg.n)
        throw ValidationError("generate_record: |G| = " + std::to_string(g.size()) +
                              " but cfg.n = " + std::to_string(cfg.n));
    for (const auto& p : g) {
        if (p.is_zero()) throw DomainError("generate_record: G entries must be nonzero");
        if (!(p.ring() == g.front().ring()))
            throw RingMismatchError("generate_record: G entries live in different rings");
    }
}

PolyMatrix padded_column(std::span<const Polynomial> g, std::uint32_t m) {
    PolyMatrix col(g.front().ring(), m, 1);
    for (std::uint32_t i = 0; i < g.size(); ++i) col.set(i, 0, g[i]);
    return col;
}

ElementaryOp sample_op(const GenConfig& cfg, const PolyRing& ring, Rng& rng) {
    const std::uint32_t m = cfg.m;
    if (m < 2) {
        // Only row scalings exist on a single row.
        return ElementaryOp::scale(m, 0, cfg.coeff_dist.sample_nonzero(ring.field, rng));
    }
    const double roll = rng.unit();
    if (roll < cfg.op_mix.add_row) {
        const auto target = static_cast<std::uint32_t>(rng.below(m));
        auto source = static_cast<std::uint32_t>(rng.below(m - 1));
        if (source >= target) ++source;
        Polynomial f =
            random_nonzero_polynomial(ring, cfg.addrow_poly_degree_max, cfg.coeff_dist, rng);
        return ElementaryOp::add_row(m, target, source, std::move(f));
    }
    if (roll < cfg.op_mix.add_row + cfg.op_mix.permute) {
        const auto i = static_cast<std::uint32_t>(rng.below(m));
        auto j = static_cast<std::uint32_t>(rng.below(m - 1));
        if (j >= i) ++j;
        return ElementaryOp::permute(m, i, j);
    }
    const auto i = static_cast<std::uint32_t>(rng.below(m));
    return ElementaryOp::scale(m, i, cfg.coeff_dist.sample_nonzero(ring.field, rng));
}

RecordStats finish_record(std::span<const Polynomial> g, std::span<const Polynomial> f,
                          const PolyMatrix& a, const PolyMatrix& b, std::uint32_t steps,
                          const GenConfig& cfg) {
    const PolyRing& ring = g.front().ring();
    if (!(mat_mul(b, a) == PolyMatrix::identity(ring, cfg.n)))
        throw VerificationError("generate_record: left-inverse witness B*A != E_n");
    const PolyMatrix recomputed = mat_mul(a, padded_column(g, cfg.n));
    for (std::uint32_t i = 0; i < cfg.m; ++i)
        if (!(recomputed.at(i, 0) == f[i]))
            throw VerificationError("generate_record: trace does not reconstruct F");

    RecordStats stats;
    stats.steps = steps;
    for (const auto& p : f) {
        stats.max_deg_f = std::max(stats.max_deg_f, p.degree().value_or(-1));
        stats.max_coeff_bits = std::max(stats.max_coeff_bits, p.max_coeff_bits());
    }
    if (cfg.verify) {
        if (!ideal_equal(f, g, MonomialOrder::lex(), cfg.verify_opts))
            throw VerificationError("generate_record: <F> != <G>; generation is broken");
        stats.verified = true;
    }
    return stats;
}

} // namespace

DatasetRecord generate_record(std::span<const Polynomial> g, const GenConfig& cfg,
                              std::uint64_t record_seed) {
    require_valid_input(g, cfg);
    const PolyRing ring = g.front().ring();
    Rng rng(record_seed);

    std::vector<ElementaryOp> applied;
    std::vector<Polynomial> f;
    bool built = false;
    for (std::uint32_t attempt = 0; attempt < cfg.max_record_retries && !built; ++attempt) {
        const auto s = static_cast<std::uint32_t>(rng.int_in(cfg.s_min, cfg.s_max));
        PolyMatrix col = padded_column(g, cfg.m);
        applied.clear();
        for (std::uint32_t step = 0; step < s; ++step) {
            bool placed = false;
            for (std::uint32_t retry = 0; retry < cfg.max_op_retries; ++retry) {
                ElementaryOp op = sample_op(cfg, ring, rng);
                PolyMatrix candidate = apply_elementary(op, col);
                if (candidate.max_degree() <= Degree::of(cfg.degree_cap)) {
                    col = std::move(candidate);
                    applied.push_back(std::move(op));
                    placed = true;
                    break;
                }
            }
            if (!placed)
                throw ResampleExhaustedError(
                    "generate_record: degree cap " + std::to_string(cfg.degree_cap) +
                    " still exceeded after " + std::to_string(cfg.max_op_retries) + " op retries");
        }
        f.clear();
        for (std::uint32_t i = 0; i < cfg.m; ++i) f.push_back(col.at(i, 0));
        built = !cfg.forbid_zero_rows ||
                std::none_of(f.begin(), f.end(), [](const Polynomial& p) { return p.is_zero(); });
    }
    if (!built)
        throw ResampleExhaustedError("generate_record: could not avoid zero rows after " +
                                     std::to_string(cfg.max_record_retries) + " record retries");

    // Ops were applied to the column left to right, so the matrix product
    // reads them in reverse.
    std::vector<ElementaryOp> ops(applied.rbegin(), applied.rend());
    const PolyMatrix a = matrix_from_trace(ops, cfg.m, cfg.n, ring);
    const PolyMatrix b = left_inverse_from_trace(ops, cfg.m, cfg.n, ring);
    RecordStats stats =
        finish_record(g, f, a, b, static_cast<std::uint32_t>(ops.size()), cfg);

    DatasetRecord rec{0,
                      record_seed,
                      std::vector<Polynomial>(g.begin(), g.end()),
                      std::move(f),
                      GenTrace{Backend::ElementaryProduct, std::move(ops), std::nullopt},
                      stats};
    return rec;
}

namespace {
PolyMatrix random_unitriangular(const PolyRing& ring, std::uint32_t size, std::uint32_t deg_max,
                                const CoeffDistribution& dist, Rng& rng) {
    PolyMatrix u = PolyMatrix::identity(ring, size);
    for (std::uint32_t i = 0; i < size; ++i)
        for (std::uint32_t j = i + 1; j < size; ++j)
            u.set(i, j, random_polynomial(ring, deg_max, dist, rng));
    return u;
}
} // namespace

DatasetRecord generate_record_bruhat(std::span<const Polynomial> g, const GenConfig& cfg,
                                     std::uint64_t record_seed) {
    require_valid_input(g, cfg);
    const PolyRing ring = g.front().ring();
    Rng rng(record_seed);

    for (std::uint32_t attempt = 0; attempt < cfg.max_record_retries; ++attempt) {
        PolyMatrix u1 =
            random_unitriangular(ring, cfg.m, cfg.addrow_poly_degree_max, cfg.coeff_dist, rng);
        PolyMatrix u2 =
            random_unitriangular(ring, cfg.n, cfg.addrow_poly_degree_max, cfg.coeff_dist, rng);
        std::vector<std::uint32_t> perm(cfg.m);
        for (std::uint32_t i = 0; i < cfg.m; ++i) perm[i] = i;
        for (std::uint32_t i = cfg.m; i-- > 1;) {
            const auto j = static_cast<std::uint32_t>(rng.below(i + 1));
            std::swap(perm[i], perm[j]);
        }

        BruhatFactors factors = bruhat_compose(u1, perm, u2);
        PolyMatrix fcol = mat_mul(factors.a, padded_column(g, cfg.n));
        if (!(fcol.max_degree() <= Degree::of(cfg.degree_cap))) continue;
        std::vector<Polynomial> f;
        for (std::uint32_t i = 0; i < cfg.m; ++i) f.push_back(fcol.at(i, 0));
        if (cfg.forbid_zero_rows &&
            std::any_of(f.begin(), f.end(), [](const Polynomial& p) { return p.is_zero(); }))
            continue;

        RecordStats stats = finish_record(g, f, factors.a, factors.b, 0, cfg);
        return DatasetRecord{
            0,
            record_seed,
            std::vector<Polynomial>(g.begin(), g.end()),
            std::move(f),
            GenTrace{Backend::Bruhat, {}, BruhatTrace{std::move(u1), std::move(perm), std::move(u2)}},
            stats};
    }
    throw ResampleExhaustedError(
        "generate_record_bruhat: degree cap or zero-row constraint still violated after " +
        std::to_string(cfg.max_record_retries) + " retries");
}

namespace {

DatasetRecord make_record(std::uint64_t idx, const GenConfig& cfg, const ShapeConfig& shape_cfg,
                          const FieldConfig& field, std::uint64_t master_seed) {
    const std::uint64_t record_seed = derive_seed(master_seed, idx);
    Rng shape_rng(derive_seed(record_seed, 0));
    const auto d = static_cast<std::uint32_t>(shape_rng.int_in(1, shape_cfg.d_max));
    const ShapeBasis basis =
        sample_shape_basis(shape_cfg.n, d, field, cfg.coeff_dist, derive_seed(record_seed, 1));
    const std::vector<Polynomial> g = basis.generators();
    DatasetRecord rec = cfg.backend == Backend::Bruhat
                            ? generate_record_bruhat(g, cfg, derive_seed(record_seed, 2))
                            : generate_record(g, cfg, derive_seed(record_seed, 2));
    rec.idx = idx;
    rec.seed = record_seed;
    return rec;
}

} // namespace

DatasetSummary generate_dataset(std::uint64_t count, const GenConfig& cfg,
                                const ShapeConfig& shape_cfg, const FieldConfig& field,
                                std::uint64_t master_seed, const RecordSink& sink,
                                std::uint32_t jobs) {
    if (count < 1) throw ValidationError("generate_dataset: count must be >= 1");
    if (shape_cfg.n != cfg.n)
        throw ValidationError("generate_dataset: shape n must equal gen n");
    if (shape_cfg.d_max < 1) throw ValidationError("generate_dataset: d_max must be >= 1");
    cfg.validate();
    cfg.coeff_dist.validate(field);
    if (jobs < 1) jobs = 1;

    std::vector<DatasetRecord> records;
    records.reserve(count);
    if (jobs == 1) {
        for (std::uint64_t idx = 0; idx < count; ++idx)
            records.push_back(make_record(idx, cfg, shape_cfg, field, master_seed));
    } else {
        records.resize(0);
        std::vector<std::optional<DatasetRecord>> slots(count);
        std::atomic<std::uint64_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        const std::uint32_t worker_count =
            static_cast<std::uint32_t>(std::min<std::uint64_t>(jobs, count));
        for (std::uint32_t w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::uint64_t idx = next.fetch_add(1);
                    if (idx >= count || failed.load()) return;
                    try {
                        slots[idx] = make_record(idx, cfg, shape_cfg, field, master_seed);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        failed.store(true);
                        return;
                    }
                }
            });
        }
        for (auto& t : workers) t.join();
        if (first_error) std::rethrow_exception(first_error);
        for (auto& slot : slots) records.push_back(std::move(*slot));
    }

    DatasetSummary summary;
    summary.count = count;
    for (const auto& rec : records) {
        try {
            sink(rec);
        } catch (const std::exception& e) {
            throw IoError("sink failed at record " + std::to_string(rec.idx) + ": " + e.what());
        }
        summary.degree_hist[rec.stats.max_deg_f]++;
        summary.coeff_bits_hist[rec.stats.max_coeff_bits]++;
        if (rec.stats.verified) ++summary.verified_count;
    }
    summary.pass_rate =
        count == 0 ? 0.0 : static_cast<double>(summary.verified_count) / static_cast<double>(count);
    return summary;
}

CoverageGrowthReport coverage_growth_experiment(const GenConfig& base_cfg,
                                                const ShapeConfig& shape_cfg,
                                                const FieldConfig& field,
                                                std::span<const std::uint32_t> s_max_values,
                                                std::uint64_t records_per_sweep,
                                                std::uint64_t master_seed) {
    if (s_max_values.empty())
        throw ValidationError("coverage_growth: need at least one s_max value");
    if (records_per_sweep < 1)
        throw ValidationError("coverage_growth: records_per_sweep must be >= 1");

    // One fixed basis for the whole sweep so only the step budget varies.
    Rng shape_rng(derive_seed(master_seed, 0));
    const auto d = static_cast<std::uint32_t>(shape_rng.int_in(1, shape_cfg.d_max));
    const ShapeBasis basis = sample_shape_basis(shape_cfg.n, d, field, base_cfg.coeff_dist,
                                                derive_seed(master_seed, 1));
    const std::vector<Polynomial> g = basis.generators();

    CoverageGrowthReport report;
    report.records_per_sweep = records_per_sweep;
    for (const std::uint32_t s_max : s_max_values) {
        GenConfig cfg = base_cfg;
        cfg.s_max = s_max;
        cfg.s_min = std::min(cfg.s_min, s_max);
        cfg.verify = false;
        std::set<std::string> distinct;
        for (std::uint64_t i = 0; i < records_per_sweep; ++i) {
            const DatasetRecord rec =
                generate_record(g, cfg, derive_seed(master_seed, 1000 + i));
            std::string key;
            for (const auto& p : rec.system_f) {
                key += render(p);
                key += ';';
            }
            distinct.insert(std::move(key));
        }
        report.s_max_values.push_back(s_max);
        report.distinct_counts.push_back(distinct.size());
    }
    return report;
}

} // namespace gbforge
