#ifndef GBFORGE_SERIALIZE_HPP
#define GBFORGE_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "gbforge/forge.hpp"

namespace gbforge {

using Json = nlohmann::ordered_json;

std::string seed_to_hex(std::uint64_t seed);
std::uint64_t seed_from_text(const std::string& text); // decimal or 0x-hex

Json field_to_json(const FieldConfig& field);
FieldConfig field_from_json(const Json& j);

std::string order_name(const MonomialOrder& order);
MonomialOrder order_from_name(const std::string& name);

/// One JSONL record:
/// {"idx":..,"seed":"0x..","G":[..],"F":[..],"order":"lex","field":{..},
///  "trace":[..],"stats":{..}}. Row indices inside trace ops are 1-based.
Json record_to_json(const DatasetRecord& rec, const MonomialOrder& order);

struct ParsedRecord {
    DatasetRecord record;
    PolyRing ring; // r = |G| variables
    MonomialOrder order;
};

ParsedRecord record_from_json(const Json& j);

/// Prefix-notation token stream over {"+","*","^","xk","C<int>","/"}.
std::vector<std::string> polynomial_tokens(const Polynomial& f, const MonomialOrder& order);

/// One line per record: F polynomials joined by "<sep>", then "<io>", then G.
std::string record_token_line(const DatasetRecord& rec, const MonomialOrder& order);

std::string fnv1a64_hex(const std::string& data);

Json summary_to_json(const DatasetSummary& summary);

} // namespace gbforge

#endif
