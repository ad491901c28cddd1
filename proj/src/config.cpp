#include "gbforge/config.hpp"

#include <set>

#include "gbforge/errors.hpp"
#include "gbforge/version.hpp"

namespace gbforge {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                         const std::string& path) {
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key))
            throw ValidationError("unknown config key '" + path + key + "'");
    }
}

const char* backend_name(Backend b) {
    return b == Backend::Bruhat ? "bruhat" : "elementary";
}

Backend backend_from_name(const std::string& name) {
    if (name == "elementary") return Backend::ElementaryProduct;
    if (name == "bruhat") return Backend::Bruhat;
    throw ValidationError("gen.backend must be 'elementary' or 'bruhat', got '" + name + "'");
}

const char* dist_kind_name(CoeffDistribution::Kind k) {
    switch (k) {
        case CoeffDistribution::Kind::UniformIntBox: return "uniform_int";
        case CoeffDistribution::Kind::UniformRational: return "uniform_rational";
        case CoeffDistribution::Kind::UniformFieldElement: return "uniform_field";
    }
    return "uniform_int";
}

} // namespace

void RunConfig::validate() const {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (m < n) throw ValidationError("m >= n required");
    if (d_max < 1) throw ValidationError("d_max must be >= 1");
    if (count < 1) throw ValidationError("count must be >= 1");
    if (gen.n != n || gen.m != m)
        throw ValidationError("gen.n/gen.m must match the top-level n/m");
    if (gen.s_min < 1) throw ValidationError("gen.s_min must be >= 1");
    gen.validate();
    gen.coeff_dist.validate(field);
    if (output.empty()) throw ValidationError("output path is required");
    if (jobs < 1) throw ValidationError("jobs must be >= 1");
}

Json RunConfig::to_json() const {
    Json j;
    j["field"] = field_to_json(field);
    j["n"] = n;
    j["m"] = m;
    j["d_max"] = d_max;
    j["count"] = count;
    j["master_seed"] = seed_to_hex(master_seed);
    Json g;
    g["backend"] = backend_name(gen.backend);
    g["s_min"] = gen.s_min;
    g["s_max"] = gen.s_max;
    Json mix;
    mix["addrow"] = gen.op_mix.add_row;
    mix["permute"] = gen.op_mix.permute;
    mix["scale"] = gen.op_mix.scale;
    g["op_mix"] = std::move(mix);
    g["addrow_poly_degree_max"] = gen.addrow_poly_degree_max;
    g["degree_cap"] = gen.degree_cap;
    g["max_op_retries"] = gen.max_op_retries;
    g["max_record_retries"] = gen.max_record_retries;
    g["forbid_zero_rows"] = gen.forbid_zero_rows;
    g["verify"] = gen.verify;
    g["verify_max_pairs"] = gen.verify_opts.max_pairs;
    j["gen"] = std::move(g);
    Json d;
    d["kind"] = dist_kind_name(gen.coeff_dist.kind);
    switch (gen.coeff_dist.kind) {
        case CoeffDistribution::Kind::UniformIntBox:
            d["lo"] = gen.coeff_dist.lo;
            d["hi"] = gen.coeff_dist.hi;
            break;
        case CoeffDistribution::Kind::UniformRational:
            d["num_lo"] = gen.coeff_dist.num_lo;
            d["num_hi"] = gen.coeff_dist.num_hi;
            d["den_lo"] = gen.coeff_dist.den_lo;
            d["den_hi"] = gen.coeff_dist.den_hi;
            break;
        case CoeffDistribution::Kind::UniformFieldElement:
            break;
    }
    d["zero_weight"] = gen.coeff_dist.zero_weight;
    j["coeff_dist"] = std::move(d);
    j["output"] = output;
    j["emit_tokens"] = emit_tokens;
    j["jobs"] = jobs;
    return j;
}

RunConfig RunConfig::from_json(const Json& j) {
    reject_unknown_keys(j,
                        {"field", "n", "m", "d_max", "count", "master_seed", "gen", "coeff_dist",
                         "output", "emit_tokens", "jobs"},
                        "");
    RunConfig cfg;
    if (j.contains("field")) {
        reject_unknown_keys(j.at("field"), {"kind", "p"}, "field.");
        cfg.field = field_from_json(j.at("field"));
    }
    cfg.n = j.value("n", cfg.n);
    cfg.m = j.value("m", cfg.m);
    cfg.d_max = j.value("d_max", cfg.d_max);
    cfg.count = j.value("count", cfg.count);
    if (j.contains("master_seed")) {
        const auto& seed = j.at("master_seed");
        cfg.master_seed = seed.is_string() ? seed_from_text(seed.get<std::string>())
                                           : seed.get<std::uint64_t>();
    }
    cfg.gen.coeff_dist = CoeffDistribution::default_for(cfg.field);
    if (j.contains("gen")) {
        const Json& g = j.at("gen");
        reject_unknown_keys(g,
                            {"backend", "s_min", "s_max", "op_mix", "addrow_poly_degree_max",
                             "degree_cap", "max_op_retries", "max_record_retries",
                             "forbid_zero_rows", "verify", "verify_max_pairs"},
                            "gen.");
        if (g.contains("backend")) cfg.gen.backend = backend_from_name(g.at("backend"));
        cfg.gen.s_min = g.value("s_min", cfg.gen.s_min);
        cfg.gen.s_max = g.value("s_max", cfg.gen.s_max);
        if (g.contains("op_mix")) {
            const Json& mix = g.at("op_mix");
            reject_unknown_keys(mix, {"addrow", "permute", "scale"}, "gen.op_mix.");
            cfg.gen.op_mix.add_row = mix.value("addrow", cfg.gen.op_mix.add_row);
            cfg.gen.op_mix.permute = mix.value("permute", cfg.gen.op_mix.permute);
            cfg.gen.op_mix.scale = mix.value("scale", cfg.gen.op_mix.scale);
        }
        cfg.gen.addrow_poly_degree_max =
            g.value("addrow_poly_degree_max", cfg.gen.addrow_poly_degree_max);
        cfg.gen.degree_cap = g.value("degree_cap", cfg.gen.degree_cap);
        cfg.gen.max_op_retries = g.value("max_op_retries", cfg.gen.max_op_retries);
        cfg.gen.max_record_retries = g.value("max_record_retries", cfg.gen.max_record_retries);
        cfg.gen.forbid_zero_rows = g.value("forbid_zero_rows", cfg.gen.forbid_zero_rows);
        cfg.gen.verify = g.value("verify", cfg.gen.verify);
        cfg.gen.verify_opts.max_pairs = g.value("verify_max_pairs", cfg.gen.verify_opts.max_pairs);
    }
    if (j.contains("coeff_dist")) {
        const Json& d = j.at("coeff_dist");
        reject_unknown_keys(
            d, {"kind", "lo", "hi", "num_lo", "num_hi", "den_lo", "den_hi", "zero_weight"},
            "coeff_dist.");
        const std::string kind = d.value("kind", "uniform_int");
        CoeffDistribution dist;
        if (kind == "uniform_int") {
            dist = CoeffDistribution::uniform_int(d.value("lo", std::int64_t{-5}),
                                                  d.value("hi", std::int64_t{5}),
                                                  d.value("zero_weight", 0.3));
        } else if (kind == "uniform_rational") {
            dist = CoeffDistribution::uniform_rational(
                d.value("num_lo", std::int64_t{-5}), d.value("num_hi", std::int64_t{5}),
                d.value("den_lo", std::int64_t{1}), d.value("den_hi", std::int64_t{5}),
                d.value("zero_weight", 0.3));
        } else if (kind == "uniform_field") {
            dist = CoeffDistribution::uniform_field(d.value("zero_weight", 0.3));
        } else {
            throw ValidationError("coeff_dist.kind '" + kind + "' is not recognized");
        }
        cfg.gen.coeff_dist = dist;
    }
    cfg.output = j.value("output", cfg.output);
    cfg.emit_tokens = j.value("emit_tokens", cfg.emit_tokens);
    cfg.jobs = j.value("jobs", cfg.jobs);
    cfg.gen.n = cfg.n;
    cfg.gen.m = cfg.m;
    return cfg;
}

Json manifest_for(const RunConfig& cfg, const DatasetSummary& summary) {
    Json m;
    m["tool"] = kToolName;
    m["version"] = kToolVersion;
    m["command"] = "generate";
    const Json echo = cfg.to_json();
    m["config"] = echo;
    m["config_hash"] = fnv1a64_hex(echo.dump());
    m["summary"] = summary_to_json(summary);
    return m;
}

} // namespace gbforge
