#include "gbforge/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "gbforge/errors.hpp"
#include "gbforge/poly_text.hpp"

namespace gbforge {

std::string seed_to_hex(std::uint64_t seed) {
    std::ostringstream os;
    os << "0x" << std::hex << seed;
    return os.str();
}

std::uint64_t seed_from_text(const std::string& text) {
    if (text.empty()) throw ParseError("empty seed");
    try {
        std::size_t used = 0;
        std::uint64_t value = 0;
        if (text.starts_with("0x") || text.starts_with("0X")) {
            value = std::stoull(text.substr(2), &used, 16);
            used += 2;
        } else {
            value = std::stoull(text, &used, 10);
        }
        if (used != text.size()) throw ParseError("trailing characters in seed '" + text + "'");
        return value;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad seed '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("seed '" + text + "' out of 64-bit range");
    }
}

Json field_to_json(const FieldConfig& field) {
    Json j;
    if (field.kind == FieldKind::Rationals) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = field.modulus;
    }
    return j;
}

FieldConfig field_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldConfig::rationals();
    if (kind == "Fp") return FieldConfig::prime_field(j.at("p").get<std::int64_t>());
    throw ParseError("unknown field kind '" + kind + "'");
}

std::string order_name(const MonomialOrder& order) {
    return order.kind == OrderKind::Lex ? "lex" : "degrevlex";
}

MonomialOrder order_from_name(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    if (name == "degrevlex") return MonomialOrder::degrevlex();
    throw ParseError("unknown monomial order '" + name + "'");
}

namespace {

Json matrix_to_json(const PolyMatrix& m, const MonomialOrder& order) {
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::uint32_t j = 0; j < m.cols(); ++j) row.push_back(render(m.at(i, j), order));
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix matrix_from_json(const Json& j, const PolyRing& ring) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a non-empty array");
    const auto rows = static_cast<std::uint32_t>(j.size());
    const auto cols = static_cast<std::uint32_t>(j.at(0).size());
    PolyMatrix m(ring, rows, cols);
    for (std::uint32_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw ParseError("matrix: ragged rows");
        for (std::uint32_t c = 0; c < cols; ++c)
            m.set(i, c, parse_polynomial(ring, j.at(i).at(c).get<std::string>()));
    }
    return m;
}

Json trace_to_json(const GenTrace& trace, const MonomialOrder& order) {
    Json arr = Json::array();
    if (trace.backend == Backend::Bruhat) {
        const BruhatTrace& bt = *trace.bruhat;
        Json op;
        op["op"] = "bruhat";
        op["u1"] = matrix_to_json(bt.u1, order);
        Json perm = Json::array();
        for (const auto p : bt.perm) perm.push_back(p + 1);
        op["s"] = std::move(perm);
        op["u2"] = matrix_to_json(bt.u2, order);
        arr.push_back(std::move(op));
        return arr;
    }
    for (const auto& op : trace.ops) {
        Json o;
        switch (op.kind()) {
            case ElementaryOp::Kind::Permute:
                o["op"] = "permute";
                o["i"] = op.index_i() + 1;
                o["j"] = op.index_j() + 1;
                break;
            case ElementaryOp::Kind::Scale:
                o["op"] = "scale";
                o["i"] = op.index_i() + 1;
                o["c"] = op.scalar().str();
                break;
            case ElementaryOp::Kind::AddRow:
                o["op"] = "addrow";
                o["i"] = op.index_i() + 1;
                o["j"] = op.index_j() + 1;
                o["f"] = render(op.poly(), order);
                break;
        }
        arr.push_back(std::move(o));
    }
    return arr;
}

GenTrace trace_from_json(const Json& arr, const PolyRing& ring, std::uint32_t m) {
    GenTrace trace;
    if (!arr.is_array()) throw ParseError("trace: expected an array");
    if (arr.size() == 1 && arr.at(0).contains("op") &&
        arr.at(0).at("op").get<std::string>() == "bruhat") {
        const Json& o = arr.at(0);
        trace.backend = Backend::Bruhat;
        PolyMatrix u1 = matrix_from_json(o.at("u1"), ring);
        PolyMatrix u2 = matrix_from_json(o.at("u2"), ring);
        std::vector<std::uint32_t> perm;
        for (const auto& v : o.at("s")) {
            const auto idx = v.get<std::int64_t>();
            if (idx < 1 || idx > m) throw ParseError("trace: permutation index out of range");
            perm.push_back(static_cast<std::uint32_t>(idx - 1));
        }
        trace.bruhat = BruhatTrace{std::move(u1), std::move(perm), std::move(u2)};
        return trace;
    }
    trace.backend = Backend::ElementaryProduct;
    for (const auto& o : arr) {
        const std::string kind = o.at("op").get<std::string>();
        const auto row = [&](const char* key) {
            const auto idx = o.at(key).get<std::int64_t>();
            if (idx < 1 || idx > m)
                throw ParseError("trace: row index " + std::to_string(idx) + " out of range");
            return static_cast<std::uint32_t>(idx - 1);
        };
        if (kind == "permute") {
            trace.ops.push_back(ElementaryOp::permute(m, row("i"), row("j")));
        } else if (kind == "scale") {
            trace.ops.push_back(ElementaryOp::scale(
                m, row("i"), FieldElem::parse(ring.field, o.at("c").get<std::string>())));
        } else if (kind == "addrow") {
            trace.ops.push_back(ElementaryOp::add_row(
                m, row("i"), row("j"), parse_polynomial(ring, o.at("f").get<std::string>())));
        } else {
            throw ParseError("trace: unknown op '" + kind + "'");
        }
    }
    return trace;
}

} // namespace

Json record_to_json(const DatasetRecord& rec, const MonomialOrder& order) {
    Json j;
    j["idx"] = rec.idx;
    j["seed"] = seed_to_hex(rec.seed);
    Json g = Json::array();
    for (const auto& p : rec.basis_g) g.push_back(render(p, order));
    j["G"] = std::move(g);
    Json f = Json::array();
    for (const auto& p : rec.system_f) f.push_back(render(p, order));
    j["F"] = std::move(f);
    j["order"] = order_name(order);
    j["field"] = rec.basis_g.empty() ? Json::object()
                                     : field_to_json(rec.basis_g.front().ring().field);
    j["trace"] = trace_to_json(rec.trace, order);
    Json stats;
    stats["s"] = rec.stats.steps;
    stats["max_deg_F"] = rec.stats.max_deg_f;
    stats["max_coeff_bits"] = rec.stats.max_coeff_bits;
    stats["verified"] = rec.stats.verified;
    j["stats"] = std::move(stats);
    return j;
}

ParsedRecord record_from_json(const Json& j) {
    const FieldConfig field = field_from_json(j.at("field"));
    const auto& g_arr = j.at("G");
    if (!g_arr.is_array() || g_arr.empty()) throw ParseError("record: G must be a non-empty array");
    const PolyRing ring{static_cast<std::uint32_t>(g_arr.size()), field};
    const MonomialOrder order = order_from_name(j.at("order").get<std::string>());

    DatasetRecord rec;
    rec.idx = j.at("idx").get<std::uint64_t>();
    rec.seed = seed_from_text(j.at("seed").get<std::string>());
    for (const auto& s : g_arr) rec.basis_g.push_back(parse_polynomial(ring, s.get<std::string>()));
    for (const auto& s : j.at("F"))
        rec.system_f.push_back(parse_polynomial(ring, s.get<std::string>()));
    if (rec.system_f.empty()) throw ParseError("record: F must be a non-empty array");
    rec.trace = trace_from_json(j.at("trace"), ring,
                                static_cast<std::uint32_t>(rec.system_f.size()));
    if (j.contains("stats")) {
        const auto& st = j.at("stats");
        rec.stats.steps = st.value("s", 0u);
        rec.stats.max_deg_f = st.value("max_deg_F", std::int64_t{-1});
        rec.stats.max_coeff_bits = st.value("max_coeff_bits", std::uint64_t{0});
        rec.stats.verified = st.value("verified", false);
    }
    return ParsedRecord{std::move(rec), ring, order};
}

namespace {

void append_coeff_tokens(std::vector<std::string>& out, const FieldElem& c) {
    if (c.field().kind == FieldKind::Rationals) {
        const mpq_class& q = c.rat();
        if (q.get_den() == 1) {
            out.push_back("C" + q.get_num().get_str());
        } else {
            out.push_back("/");
            out.push_back("C" + q.get_num().get_str());
            out.push_back("C" + q.get_den().get_str());
        }
    } else {
        out.push_back("C" + std::to_string(c.residue_value()));
    }
}

std::vector<std::vector<std::string>> term_pieces(const Monomial& mono, const FieldElem& c) {
    std::vector<std::vector<std::string>> pieces;
    bool coeff_needed = !c.is_one();
    if (mono.total_degree() == 0) coeff_needed = true;
    if (coeff_needed) {
        std::vector<std::string> piece;
        append_coeff_tokens(piece, c);
        pieces.push_back(std::move(piece));
    }
    for (std::uint32_t i = 0; i < mono.nvars(); ++i) {
        const std::uint32_t e = mono.exponent(i);
        if (e == 0) continue;
        const std::string var = "x" + std::to_string(i + 1);
        if (e == 1) {
            pieces.push_back({var});
        } else {
            pieces.push_back({"^", var, "C" + std::to_string(e)});
        }
    }
    return pieces;
}

} // namespace

std::vector<std::string> polynomial_tokens(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return {"C0"};
    std::vector<const std::pair<const Monomial, FieldElem>*> terms;
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
        return monomial_cmp(order, a->first, b->first) == Ordering::GT;
    });

    std::vector<std::string> out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (t + 1 < terms.size()) out.push_back("+");
        const auto pieces = term_pieces(terms[t]->first, terms[t]->second);
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            if (p + 1 < pieces.size()) out.push_back("*");
            out.insert(out.end(), pieces[p].begin(), pieces[p].end());
        }
    }
    return out;
}

std::string record_token_line(const DatasetRecord& rec, const MonomialOrder& order) {
    std::string line;
    const auto append_poly = [&](const Polynomial& p) {
        for (const auto& tok : polynomial_tokens(p, order)) {
            if (!line.empty()) line += ' ';
            line += tok;
        }
    };
    for (std::size_t i = 0; i < rec.system_f.size(); ++i) {
        if (i > 0) line += " <sep>";
        append_poly(rec.system_f[i]);
    }
    line += " <io>";
    for (std::size_t i = 0; i < rec.basis_g.size(); ++i) {
        if (i > 0) line += " <sep>";
        append_poly(rec.basis_g[i]);
    }
    return line;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (const unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001B3ULL;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

Json summary_to_json(const DatasetSummary& summary) {
    Json j;
    j["count"] = summary.count;
    j["verified_count"] = summary.verified_count;
    j["pass_rate"] = summary.pass_rate;
    Json deg = Json::object();
    for (const auto& [k, v] : summary.degree_hist) deg[std::to_string(k)] = v;
    j["max_deg_F_hist"] = std::move(deg);
    Json bits = Json::object();
    for (const auto& [k, v] : summary.coeff_bits_hist) bits[std::to_string(k)] = v;
    j["coeff_bits_hist"] = std::move(bits);
    return j;
}

} // namespace gbforge
