#ifndef GBFORGE_CONFIG_HPP
#define GBFORGE_CONFIG_HPP

#include <string>

#include "gbforge/forge.hpp"
#include "gbforge/serialize.hpp"

namespace gbforge {

// Everything a `generate` run needs, serializable as one JSON document.
// CLI flags override file values; the manifest embeds the full echo so a
// run can be reproduced byte-for-byte.
struct RunConfig {
    FieldConfig field;
    std::uint32_t n = 2;
    std::uint32_t m = 3;
    std::uint32_t d_max = 5;
    std::uint64_t count = 1;
    std::uint64_t master_seed = 0;
    GenConfig gen;
    std::string output;
    bool emit_tokens = false;
    std::uint32_t jobs = 1;

    /// ValidationError with a field path on the first violated constraint.
    void validate() const;

    Json to_json() const;
    /// Unknown keys are rejected.
    static RunConfig from_json(const Json& j);
};

Json manifest_for(const RunConfig& cfg, const DatasetSummary& summary);

} // namespace gbforge

#endif
