#include "gbforge/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "gbforge/config.hpp"
#include "gbforge/density.hpp"
#include "gbforge/errors.hpp"
#include "gbforge/version.hpp"

namespace gbforge::cli {

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::uint32_t default_jobs() {
    if (const char* env = std::getenv("GBFORGE_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return static_cast<std::uint32_t>(v);
        } catch (...) {
        }
    }
    return 1;
}

// ---- generate ------------------------------------------------------------

struct GenerateFlags {
    std::string config_path, manifest_in, output, manifest_out, seed_text, field_name,
        backend_name, coeff_kind;
    std::uint32_t n = 0, m = 0, d_max = 0, s_min = 0, s_max = 0, addrow_deg = 0, jobs = 0;
    std::uint64_t count = 0;
    std::int64_t modulus = 0, degree_cap = 0, lo = 0, hi = 0, num_lo = 0, num_hi = 0, den_lo = 0,
                 den_hi = 0;
    double zero_weight = 0.0;
    std::vector<double> op_mix;
    bool no_verify = false, allow_zero_rows = false, emit_tokens = false;
};

void apply_generate_overrides(const CLI::App& cmd, const GenerateFlags& fl, RunConfig& cfg) {
    const auto given = [&](const std::string& name) { return cmd.count(name) > 0; };
    if (given("--field")) {
        if (fl.field_name == "Q") {
            cfg.field = FieldConfig::rationals();
        } else if (fl.field_name == "Fp") {
            if (!given("--modulus") && cfg.field.kind != FieldKind::PrimeField)
                throw ValidationError("--field Fp requires --modulus");
            cfg.field = FieldConfig::prime_field(given("--modulus") ? fl.modulus
                                                                    : cfg.field.modulus);
        } else {
            throw ValidationError("--field must be Q or Fp");
        }
        cfg.gen.coeff_dist = CoeffDistribution::default_for(cfg.field);
    } else if (given("--modulus")) {
        cfg.field = FieldConfig::prime_field(fl.modulus);
        cfg.gen.coeff_dist = CoeffDistribution::default_for(cfg.field);
    }
    if (given("--n")) cfg.n = fl.n;
    if (given("--m")) cfg.m = fl.m;
    if (given("--d-max")) cfg.d_max = fl.d_max;
    if (given("--count")) cfg.count = fl.count;
    if (given("--seed")) cfg.master_seed = seed_from_text(fl.seed_text);
    if (given("--backend"))
        cfg.gen.backend =
            fl.backend_name == "bruhat" ? Backend::Bruhat : Backend::ElementaryProduct;
    if (given("--s-min")) cfg.gen.s_min = fl.s_min;
    if (given("--s-max")) cfg.gen.s_max = fl.s_max;
    if (given("--op-mix")) {
        if (fl.op_mix.size() != 3)
            throw ValidationError("--op-mix needs three values: addrow,permute,scale");
        cfg.gen.op_mix = OpMix{fl.op_mix[0], fl.op_mix[1], fl.op_mix[2]};
    }
    if (given("--addrow-deg")) cfg.gen.addrow_poly_degree_max = fl.addrow_deg;
    if (given("--degree-cap")) cfg.gen.degree_cap = fl.degree_cap;
    if (given("--no-verify")) cfg.gen.verify = false;
    if (given("--allow-zero-rows")) cfg.gen.forbid_zero_rows = false;
    if (given("--emit-tokens")) cfg.emit_tokens = true;
    if (given("--coeff-kind") || given("--coeff-lo") || given("--coeff-hi") ||
        given("--zero-weight") || given("--num-lo") || given("--num-hi") || given("--den-lo") ||
        given("--den-hi")) {
        CoeffDistribution d = cfg.gen.coeff_dist;
        if (given("--coeff-kind")) {
            if (fl.coeff_kind == "uniform_int")
                d = CoeffDistribution::uniform_int(-5, 5, 0.3);
            else if (fl.coeff_kind == "uniform_rational")
                d = CoeffDistribution::uniform_rational(-5, 5, 1, 5, 0.3);
            else if (fl.coeff_kind == "uniform_field")
                d = CoeffDistribution::uniform_field(0.3);
            else
                throw ValidationError("--coeff-kind must be uniform_int, uniform_rational, or "
                                      "uniform_field");
        }
        if (given("--coeff-lo")) d.lo = fl.lo;
        if (given("--coeff-hi")) d.hi = fl.hi;
        if (given("--num-lo")) d.num_lo = fl.num_lo;
        if (given("--num-hi")) d.num_hi = fl.num_hi;
        if (given("--den-lo")) d.den_lo = fl.den_lo;
        if (given("--den-hi")) d.den_hi = fl.den_hi;
        if (given("--zero-weight")) d.zero_weight = fl.zero_weight;
        cfg.gen.coeff_dist = d;
    }
    if (given("--output")) cfg.output = fl.output;
    if (given("--jobs")) cfg.jobs = fl.jobs;
    cfg.gen.n = cfg.n;
    cfg.gen.m = cfg.m;
}

int run_generate(const CLI::App& cmd, const GenerateFlags& fl) {
    RunConfig cfg;
    cfg.jobs = default_jobs();
    cfg.gen.coeff_dist = CoeffDistribution::default_for(cfg.field);
    if (!fl.manifest_in.empty()) {
        const Json manifest = load_json_file(fl.manifest_in);
        if (!manifest.contains("config"))
            throw ValidationError("manifest '" + fl.manifest_in + "' has no config echo");
        cfg = RunConfig::from_json(manifest.at("config"));
    } else if (!fl.config_path.empty()) {
        const Json file_cfg = load_json_file(fl.config_path);
        cfg = RunConfig::from_json(file_cfg);
        if (!file_cfg.contains("jobs")) cfg.jobs = default_jobs();
    }
    apply_generate_overrides(cmd, fl, cfg);
    cfg.validate();

    std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output '" + cfg.output + "'");
    std::optional<std::ofstream> tokens;
    const std::string tokens_path = cfg.output + ".tokens";
    if (cfg.emit_tokens) {
        tokens.emplace(tokens_path, std::ios::binary | std::ios::trunc);
        if (!*tokens) throw IoError("cannot open token output '" + tokens_path + "'");
    }

    const MonomialOrder order = MonomialOrder::lex();
    const RecordSink sink = [&](const DatasetRecord& rec) {
        out << record_to_json(rec, order).dump() << '\n';
        if (tokens) *tokens << record_token_line(rec, order) << '\n';
    };
    const ShapeConfig shape_cfg{cfg.n, cfg.d_max};
    const DatasetSummary summary = generate_dataset(cfg.count, cfg.gen, shape_cfg, cfg.field,
                                                    cfg.master_seed, sink, cfg.jobs);
    out.close();
    if (tokens) tokens->close();

    const std::string manifest_path =
        fl.manifest_out.empty() ? cfg.output + ".manifest.json" : fl.manifest_out;
    std::ofstream mf(manifest_path, std::ios::binary | std::ios::trunc);
    if (!mf) throw IoError("cannot open manifest '" + manifest_path + "'");
    mf << manifest_for(cfg, summary).dump(2) << '\n';

    std::cout << "wrote " << summary.count << " records to " << cfg.output
              << " (verified " << summary.verified_count << ", pass rate " << summary.pass_rate
              << "), manifest " << manifest_path << "\n";
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct RecordCheck {
    std::uint64_t line = 0;
    bool pass = false;
    std::vector<std::string> reasons;
};

RecordCheck check_record_line(const std::string& line, std::uint64_t line_no,
                              std::uint64_t max_pairs) {
    RecordCheck result;
    result.line = line_no;
    ParsedRecord parsed = [&] {
        try {
            return record_from_json(Json::parse(line));
        } catch (const std::exception& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }();
    const DatasetRecord& rec = parsed.record;
    const PolyRing& ring = parsed.ring;
    const auto n = static_cast<std::uint32_t>(rec.basis_g.size());
    const auto m = static_cast<std::uint32_t>(rec.system_f.size());

    // Reconstruct A and B from the trace and re-check everything the
    // generator promised.
    std::optional<PolyMatrix> a, b;
    try {
        if (rec.trace.backend == Backend::Bruhat) {
            const BruhatTrace& bt = *rec.trace.bruhat;
            BruhatFactors factors = bruhat_compose(bt.u1, bt.perm, bt.u2);
            a = std::move(factors.a);
            b = std::move(factors.b);
        } else {
            a = matrix_from_trace(rec.trace.ops, m, n, ring);
            b = left_inverse_from_trace(rec.trace.ops, m, n, ring);
        }
    } catch (const std::exception&) {
        result.reasons.push_back("trace_invalid");
    }
    if (a) {
        const PolyMatrix recomputed = mat_mul(*a, PolyMatrix::column(rec.basis_g));
        bool same = true;
        for (std::uint32_t i = 0; i < m && same; ++i)
            same = recomputed.at(i, 0) == rec.system_f[i];
        if (!same) result.reasons.push_back("trace_mismatch");
        if (!(mat_mul(*b, *a) == PolyMatrix::identity(ring, n)))
            result.reasons.push_back("witness_mismatch");
    }
    try {
        BuchbergerOptions opts;
        opts.max_pairs = max_pairs;
        if (!ideal_equal(rec.system_f, rec.basis_g, MonomialOrder::lex(), opts))
            result.reasons.push_back("ideal_mismatch");
    } catch (const BudgetExceededError&) {
        result.reasons.push_back("budget_exceeded");
    }
    result.pass = result.reasons.empty();
    return result;
}

int run_verify(const std::string& path, std::uint32_t jobs, std::uint64_t max_pairs) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset '" + path + "'");
    std::vector<std::pair<std::uint64_t, std::string>> lines;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty()) lines.emplace_back(line_no, line);
    }

    std::vector<RecordCheck> checks(lines.size());
    const auto check_at = [&](std::size_t i) {
        try {
            checks[i] = check_record_line(lines[i].second, lines[i].first, max_pairs);
        } catch (const ParseError& e) {
            checks[i].line = lines[i].first;
            checks[i].pass = false;
            checks[i].reasons = {"parse_error: " + std::string(e.what())};
        }
    };
    if (jobs <= 1 || lines.size() < 2) {
        for (std::size_t i = 0; i < lines.size(); ++i) check_at(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (std::uint32_t w = 0; w < std::min<std::size_t>(jobs, lines.size()); ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= lines.size()) return;
                    check_at(i);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    std::uint64_t passed = 0;
    for (const auto& c : checks) {
        if (c.pass) {
            ++passed;
            std::cout << "record at line " << c.line << ": PASS\n";
        } else {
            std::cout << "record at line " << c.line << ": FAIL [";
            for (std::size_t i = 0; i < c.reasons.size(); ++i)
                std::cout << (i ? " " : "") << c.reasons[i];
            std::cout << "]\n";
        }
    }
    std::cout << passed << "/" << checks.size() << " records passed\n";
    return passed == checks.size() ? kExitOk : kExitVerification;
}

// ---- experiment ------------------------------------------------------------

int run_experiment(const std::string& kind, const FieldConfig& field, std::uint32_t n,
                   std::uint32_t m, std::uint32_t r, std::uint32_t degree_bound,
                   std::uint64_t trials, std::uint64_t seed, std::uint64_t oracle_budget,
                   const CoeffDistribution& dist, std::vector<std::uint32_t> s_max_list,
                   std::uint32_t addrow_deg, std::int64_t degree_cap, std::uint32_t jobs,
                   const std::string& out_path) {
    Json report;
    if (kind == "det_irreducibility") {
        DetExperimentConfig cfg;
        cfg.n = n;
        cfg.r = r;
        cfg.degree_bound = degree_bound;
        cfg.trials = trials;
        cfg.field = field;
        cfg.dist = dist;
        cfg.seed = seed;
        cfg.oracle_budget = oracle_budget;
        cfg.jobs = jobs;
        const DetExperimentReport res = det_irreducibility_experiment(cfg);
        report["kind"] = kind;
        Json echo;
        echo["n"] = cfg.n;
        echo["r"] = cfg.r;
        echo["D"] = cfg.degree_bound;
        echo["trials"] = cfg.trials;
        echo["field"] = field_to_json(cfg.field);
        echo["seed"] = seed_to_hex(cfg.seed);
        echo["oracle_budget"] = cfg.oracle_budget;
        report["config"] = std::move(echo);
        report["irreducible"] = res.irreducible;
        report["reducible"] = res.reducible;
        report["not_applicable"] = res.not_applicable;
        report["unknown"] = res.unknown;
        report["irreducible_fraction"] = res.irreducible_fraction;
        if (res.unknown > res.irreducible + res.reducible)
            std::cerr << "warning: oracle verdicts dominated by Unknown; parameters exceed the "
                         "oracle's capability\n";
    } else if (kind == "section_roundtrip") {
        const SectionRoundTripReport res =
            section_roundtrip_experiment(n, m, degree_bound, trials, field, dist, seed);
        report["kind"] = kind;
        Json echo;
        echo["n"] = n;
        echo["m"] = m;
        echo["D"] = degree_bound;
        echo["trials"] = trials;
        echo["field"] = field_to_json(field);
        echo["seed"] = seed_to_hex(seed);
        report["config"] = std::move(echo);
        report["trials"] = res.trials;
        report["passes"] = res.passes;
    } else if (kind == "coverage_growth") {
        GenConfig base;
        base.n = n;
        base.m = m;
        base.addrow_poly_degree_max = addrow_deg;
        base.degree_cap = degree_cap;
        base.coeff_dist = dist;
        base.verify = false;
        const ShapeConfig shape_cfg{n, degree_bound};
        const CoverageGrowthReport res =
            coverage_growth_experiment(base, shape_cfg, field, s_max_list, trials, seed);
        report["kind"] = kind;
        Json echo;
        echo["n"] = n;
        echo["m"] = m;
        echo["d_max"] = degree_bound;
        echo["records_per_sweep"] = trials;
        echo["field"] = field_to_json(field);
        echo["seed"] = seed_to_hex(seed);
        report["config"] = std::move(echo);
        report["s_max"] = res.s_max_values;
        report["distinct_F"] = res.distinct_counts;
    } else {
        throw ValidationError("unknown experiment kind '" + kind + "'");
    }

    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open report path '" + out_path + "'");
        out << text;
        std::cout << "wrote report to " << out_path << "\n";
    }
    return kExitOk;
}

// ---- stats -------------------------------------------------------------------

int run_stats(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset '" + path + "'");
    DatasetSummary summary;
    std::optional<Json> field_echo;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const ParsedRecord parsed = record_from_json(Json::parse(line));
        ++summary.count;
        std::int64_t max_deg = -1;
        std::uint64_t max_bits = 0;
        for (const auto& p : parsed.record.system_f) {
            max_deg = std::max(max_deg, p.degree().value_or(-1));
            max_bits = std::max(max_bits, p.max_coeff_bits());
        }
        summary.degree_hist[max_deg]++;
        summary.coeff_bits_hist[max_bits]++;
        if (parsed.record.stats.verified) ++summary.verified_count;
        if (!field_echo) field_echo = field_to_json(parsed.ring.field);
    }
    summary.pass_rate = summary.count == 0
                            ? 0.0
                            : static_cast<double>(summary.verified_count) /
                                  static_cast<double>(summary.count);
    Json j = summary_to_json(summary);
    if (field_echo) j["field"] = *field_echo;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{std::string(kToolName) + " " + kToolVersion +
                 " - verified (F, G) dataset generation for polynomial ideals"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    // generate
    GenerateFlags fl;
    CLI::App* gen = app.add_subcommand("generate", "generate a JSONL dataset of (F, G) pairs");
    gen->add_option("--config", fl.config_path, "JSON config file (flags override it)");
    gen->add_option("--from-manifest", fl.manifest_in, "reproduce a run from its manifest");
    gen->add_option("--n", fl.n, "number of basis polynomials (= variables)");
    gen->add_option("--m", fl.m, "number of generated polynomials, m >= n");
    gen->add_option("--count", fl.count, "number of records");
    gen->add_option("--seed", fl.seed_text, "master seed (decimal or 0x-hex)");
    gen->add_option("--field", fl.field_name, "coefficient field: Q or Fp");
    gen->add_option("--modulus", fl.modulus, "prime modulus for Fp");
    gen->add_option("--d-max", fl.d_max, "max degree of the univariate tail (d in [1, d_max])");
    gen->add_option("--backend", fl.backend_name, "elementary or bruhat")
        ->check(CLI::IsMember({"elementary", "bruhat"}));
    gen->add_option("--s-min", fl.s_min, "min number of elementary ops");
    gen->add_option("--s-max", fl.s_max, "max number of elementary ops");
    gen->add_option("--op-mix", fl.op_mix, "addrow,permute,scale probabilities")->delimiter(',');
    gen->add_option("--addrow-deg", fl.addrow_deg, "max degree of row-addition polynomials");
    gen->add_option("--degree-cap", fl.degree_cap, "max allowed deg f_i before resampling");
    gen->add_option("--coeff-kind", fl.coeff_kind,
                    "uniform_int | uniform_rational | uniform_field");
    gen->add_option("--coeff-lo", fl.lo, "uniform_int lower bound");
    gen->add_option("--coeff-hi", fl.hi, "uniform_int upper bound");
    gen->add_option("--num-lo", fl.num_lo, "uniform_rational numerator lower bound");
    gen->add_option("--num-hi", fl.num_hi, "uniform_rational numerator upper bound");
    gen->add_option("--den-lo", fl.den_lo, "uniform_rational denominator lower bound");
    gen->add_option("--den-hi", fl.den_hi, "uniform_rational denominator upper bound");
    gen->add_option("--zero-weight", fl.zero_weight, "probability of a zero coefficient");
    gen->add_flag("--no-verify", fl.no_verify, "skip the ideal-equality oracle per record");
    gen->add_flag("--allow-zero-rows", fl.allow_zero_rows, "permit zero polynomials in F");
    gen->add_flag("--emit-tokens", fl.emit_tokens, "also write <output>.tokens");
    gen->add_option("--output", fl.output, "JSONL output path");
    gen->add_option("--manifest", fl.manifest_out, "manifest path (default <output>.manifest.json)");
    gen->add_option("--jobs", fl.jobs, "worker threads (env GBFORGE_JOBS)");

    // verify
    std::string verify_path;
    std::uint32_t verify_jobs = default_jobs();
    std::uint64_t verify_max_pairs = 100000;
    CLI::App* ver = app.add_subcommand("verify", "re-check every record of a dataset");
    ver->add_option("dataset", verify_path, "JSONL dataset path")->required();
    ver->add_option("--jobs", verify_jobs, "worker threads");
    ver->add_option("--max-pairs", verify_max_pairs, "S-pair budget per basis computation");

    // experiment
    std::string exp_kind, exp_out, exp_field_name = "Q", exp_seed_text = "0";
    std::int64_t exp_modulus = 0;
    std::uint32_t exp_n = 2, exp_m = 4, exp_r = 1, exp_deg = 1, exp_addrow_deg = 1;
    std::int64_t exp_degree_cap = 8;
    std::uint64_t exp_trials = 1000, exp_budget = 200000;
    std::vector<std::uint32_t> exp_s_max_list{1, 2, 3, 4};
    std::int64_t exp_lo = -3, exp_hi = 3;
    double exp_zero_weight = 0.0;
    CLI::App* exp = app.add_subcommand("experiment", "density and irreducibility experiments");
    exp->add_option("--kind", exp_kind,
                    "det_irreducibility | section_roundtrip | coverage_growth")
        ->required()
        ->check(CLI::IsMember({"det_irreducibility", "section_roundtrip", "coverage_growth"}));
    exp->add_option("--n", exp_n, "matrix size / basis size");
    exp->add_option("--m", exp_m, "system size (section_roundtrip, coverage_growth)");
    exp->add_option("--r", exp_r, "number of ring variables (det_irreducibility)");
    exp->add_option("--D", exp_deg, "entry degree bound (d_max for coverage_growth)");
    exp->add_option("--trials", exp_trials, "trials (records per sweep for coverage_growth)");
    exp->add_option("--seed", exp_seed_text, "seed (decimal or 0x-hex)");
    exp->add_option("--oracle-budget", exp_budget, "irreducibility oracle candidate budget");
    exp->add_option("--field", exp_field_name, "Q or Fp")->check(CLI::IsMember({"Q", "Fp"}));
    exp->add_option("--modulus", exp_modulus, "prime modulus for Fp");
    exp->add_option("--coeff-lo", exp_lo, "uniform_int lower bound");
    exp->add_option("--coeff-hi", exp_hi, "uniform_int upper bound");
    exp->add_option("--zero-weight", exp_zero_weight, "probability of a zero coefficient");
    exp->add_option("--s-max-list", exp_s_max_list, "coverage_growth sweep values")
        ->delimiter(',');
    exp->add_option("--addrow-deg", exp_addrow_deg, "coverage_growth row-addition degree");
    exp->add_option("--degree-cap", exp_degree_cap, "coverage_growth degree cap");
    std::uint32_t exp_jobs = default_jobs();
    exp->add_option("--jobs", exp_jobs, "worker threads (det_irreducibility)");
    exp->add_option("--out", exp_out, "write the JSON report here instead of stdout");

    // stats
    std::string stats_path;
    CLI::App* st = app.add_subcommand("stats", "summarize a dataset without verification");
    st->add_option("dataset", stats_path, "JSONL dataset path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (gen->parsed()) return run_generate(*gen, fl);
        if (ver->parsed()) return run_verify(verify_path, verify_jobs, verify_max_pairs);
        if (exp->parsed()) {
            FieldConfig field = exp_field_name == "Fp" ? FieldConfig::prime_field(exp_modulus)
                                                       : FieldConfig::rationals();
            CoeffDistribution dist =
                field.kind == FieldKind::Rationals
                    ? CoeffDistribution::uniform_int(exp_lo, exp_hi, exp_zero_weight)
                    : CoeffDistribution::uniform_field(exp_zero_weight);
            return run_experiment(exp_kind, field, exp_n, exp_m, exp_r, exp_deg, exp_trials,
                                  seed_from_text(exp_seed_text), exp_budget, dist, exp_s_max_list,
                                  exp_addrow_deg, exp_degree_cap, exp_jobs, exp_out);
        }
        if (st->parsed()) return run_stats(stats_path);
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ResampleExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace gbforge::cli
