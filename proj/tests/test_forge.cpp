#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gbforge/errors.hpp"
#include "gbforge/forge.hpp"
#include "gbforge/serialize.hpp"
#include "test_helpers.hpp"

using namespace gbforge;
using namespace gbforge::test;

namespace {

GenConfig small_config(const FieldConfig& field, std::uint32_t n, std::uint32_t m) {
    GenConfig cfg;
    cfg.n = n;
    cfg.m = m;
    cfg.coeff_dist = CoeffDistribution::default_for(field);
    return cfg;
}

} // namespace

TEST_CASE("zero-op hook: F is G padded with zero rows") {
    const PolyRing r2 = ring_q(2);
    const std::vector<Polynomial> g = PV(r2, {"x1 - x2", "x2^2 - 2"});
    GenConfig cfg = small_config(r2.field, 2, 4);
    cfg.s_min = 0;
    cfg.s_max = 0;
    cfg.forbid_zero_rows = false;
    const DatasetRecord rec = generate_record(g, cfg, 5);
    REQUIRE(rec.system_f.size() == 4);
    CHECK(rec.system_f[0] == g[0]);
    CHECK(rec.system_f[1] == g[1]);
    CHECK(rec.system_f[2].is_zero());
    CHECK(rec.system_f[3].is_zero());
    CHECK(rec.stats.steps == 0);
    CHECK(rec.stats.verified);
}

TEST_CASE("single row addition matches the by-hand product") {
    const PolyRing r2 = ring_q(2);
    const std::vector<Polynomial> g = PV(r2, {"x1 - x2", "x2^2 - 2"});
    GenConfig cfg = small_config(r2.field, 2, 3);
    cfg.s_min = 1;
    cfg.s_max = 1;
    cfg.op_mix = OpMix{1.0, 0.0, 0.0}; // row additions only
    cfg.forbid_zero_rows = false;
    const DatasetRecord rec = generate_record(g, cfg, 17);
    REQUIRE(rec.trace.ops.size() == 1);
    const ElementaryOp& op = rec.trace.ops[0];
    REQUIRE(op.kind() == ElementaryOp::Kind::AddRow);
    // row[target] += f * row[source] applied to (g1, g2, 0)
    std::vector<Polynomial> expected = {g[0], g[1], Polynomial::zero(r2)};
    expected[op.index_i()] += op.poly() * expected[op.index_j()];
    CHECK(rec.system_f == expected);
}

TEST_CASE("records verify and carry exact witnesses") {
    for (const FieldConfig& field :
         {FieldConfig::rationals(), FieldConfig::prime_field(32003)}) {
        const CoeffDistribution dist = CoeffDistribution::default_for(field);
        GenConfig cfg = small_config(field, 2, 4);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const ShapeBasis basis = sample_shape_basis(2, 3, field, dist, derive_seed(77, seed));
            const std::vector<Polynomial> g = basis.generators();
            const DatasetRecord rec = generate_record(g, cfg, seed);
            REQUIRE(rec.stats.verified);
            REQUIRE(rec.system_f.size() == 4);
            // recompute the witness independently of the generator internals
            const PolyMatrix a = matrix_from_trace(rec.trace.ops, cfg.m, cfg.n, basis.ring);
            const PolyMatrix b = left_inverse_from_trace(rec.trace.ops, cfg.m, cfg.n, basis.ring);
            REQUIRE(mat_mul(b, a) == PolyMatrix::identity(basis.ring, cfg.n));
            const PolyMatrix f_again = mat_mul(a, PolyMatrix::column(g));
            for (std::uint32_t i = 0; i < cfg.m; ++i)
                REQUIRE(f_again.at(i, 0) == rec.system_f[i]);
            for (const auto& p : rec.system_f) REQUIRE_FALSE(p.is_zero());
            REQUIRE(rec.stats.max_deg_f <= cfg.degree_cap);
        }
    }
}

TEST_CASE("bruhat backend") {
    const PolyRing r2 = ring_q(2);
    const std::vector<Polynomial> g = PV(r2, {"x1 - x2", "x2^2 - 2"});
    SUBCASE("identity factors give the padded column") {
        const std::vector<std::uint32_t> id{0, 1, 2};
        const BruhatFactors f =
            bruhat_compose(PolyMatrix::identity(r2, 3), id, PolyMatrix::identity(r2, 2));
        const PolyMatrix fg = mat_mul(f.a, PolyMatrix::column(g));
        CHECK(fg.at(0, 0) == g[0]);
        CHECK(fg.at(1, 0) == g[1]);
        CHECK(fg.at(2, 0).is_zero());
    }
    SUBCASE("single U2 entry mixes the basis rows") {
        PolyMatrix u2 = PolyMatrix::identity(r2, 2);
        u2.set(0, 1, P(r2, "x2"));
        const std::vector<std::uint32_t> id{0, 1, 2};
        const BruhatFactors f =
            bruhat_compose(PolyMatrix::identity(r2, 3), id, u2);
        const PolyMatrix fg = mat_mul(f.a, PolyMatrix::column(g));
        CHECK(fg.at(0, 0) == g[0] + P(r2, "x2") * g[1]);
        CHECK(fg.at(1, 0) == g[1]);
        CHECK(fg.at(2, 0).is_zero());
    }
    SUBCASE("random records verify") {
        GenConfig cfg = small_config(r2.field, 2, 3);
        cfg.backend = Backend::Bruhat;
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const DatasetRecord rec = generate_record_bruhat(g, cfg, seed);
            REQUIRE(rec.stats.verified);
            REQUIRE(rec.trace.bruhat.has_value());
            const BruhatTrace& bt = *rec.trace.bruhat;
            const BruhatFactors f = bruhat_compose(bt.u1, bt.perm, bt.u2);
            const PolyMatrix fg = mat_mul(f.a, PolyMatrix::column(g));
            for (std::uint32_t i = 0; i < cfg.m; ++i)
                REQUIRE(fg.at(i, 0) == rec.system_f[i]);
        }
    }
}

TEST_CASE("config validation") {
    const FieldConfig q = FieldConfig::rationals();
    GenConfig cfg = small_config(q, 2, 1); // m < n
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg = small_config(q, 2, 3);
    cfg.op_mix = OpMix{0.5, 0.2, 0.2};
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg = small_config(q, 2, 3);
    const std::vector<Polynomial> wrong_size = PV(ring_q(2), {"x1"});
    CHECK_THROWS_AS(generate_record(wrong_size, cfg, 0), ValidationError);
    const std::vector<Polynomial> with_zero =
        PV(ring_q(2), {"x1 - x2", "0"});
    CHECK_THROWS_AS(generate_record(with_zero, cfg, 0), DomainError);
}

TEST_CASE("degree cap triggers the structured resample error when impossible") {
    const PolyRing r1 = ring_q(1);
    const std::vector<Polynomial> g = PV(r1, {"x1^2"});
    GenConfig cfg = small_config(r1.field, 1, 2);
    cfg.s_min = 1;
    cfg.s_max = 1;
    cfg.op_mix = OpMix{1.0, 0.0, 0.0};
    cfg.degree_cap = 1; // any f * x1^2 already exceeds it
    cfg.forbid_zero_rows = false;
    CHECK_THROWS_AS(generate_record(g, cfg, 3), ResampleExhaustedError);
}

TEST_CASE("generate_dataset") {
    const FieldConfig q = FieldConfig::rationals();
    GenConfig cfg = small_config(q, 2, 3);
    const ShapeConfig shape{2, 3};
    SUBCASE("count precondition") {
        CHECK_THROWS_AS(generate_dataset(0, cfg, shape, q, 1, [](const DatasetRecord&) {}),
                        ValidationError);
    }
    SUBCASE("records arrive in index order and reproduce bitwise") {
        const auto run = [&](std::uint32_t jobs) {
            std::string blob;
            std::uint64_t expected_idx = 0;
            const DatasetSummary summary = generate_dataset(
                40, cfg, shape, q, 2024,
                [&](const DatasetRecord& rec) {
                    REQUIRE(rec.idx == expected_idx++);
                    blob += record_to_json(rec, MonomialOrder::lex()).dump();
                    blob += '\n';
                },
                jobs);
            CHECK(summary.count == 40);
            CHECK(summary.verified_count == 40);
            CHECK(summary.pass_rate == 1.0);
            return blob;
        };
        const std::string once = run(1);
        const std::string again = run(1);
        const std::string parallel = run(4);
        CHECK(once == again);
        CHECK(once == parallel);
    }
    SUBCASE("summary histograms cover every record") {
        std::uint64_t seen = 0;
        const DatasetSummary summary =
            generate_dataset(25, cfg, shape, q, 77, [&](const DatasetRecord&) { ++seen; });
        CHECK(seen == 25);
        std::uint64_t total = 0;
        for (const auto& [deg, count] : summary.degree_hist) total += count;
        CHECK(total == 25);
    }
}

TEST_CASE("coverage growth: distinct outputs do not shrink as s_max grows") {
    const FieldConfig q = FieldConfig::rationals();
    GenConfig cfg = small_config(q, 2, 3);
    cfg.coeff_dist = CoeffDistribution::uniform_int(-1, 1, 0.0); // 3-element coefficient set
    cfg.addrow_poly_degree_max = 1;
    const ShapeConfig shape{2, 2};
    const std::vector<std::uint32_t> sweep{1, 2, 3, 4};
    const CoverageGrowthReport report =
        coverage_growth_experiment(cfg, shape, q, sweep, 10000, 11);
    REQUIRE(report.distinct_counts.size() == 4);
    for (std::size_t i = 1; i < report.distinct_counts.size(); ++i)
        CHECK(report.distinct_counts[i] >= report.distinct_counts[i - 1]);
    CHECK(report.distinct_counts[0] >= 2);
}
