#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spine/relations.hpp"

namespace spinectl {

enum class DeltaChoice { pi, rho, both };

struct RunConfig {
    int q = 2;
    int n = 6;
    int k = 2;
    int m = 1;
    int w = 3;
    DeltaChoice delta = DeltaChoice::both;
    std::uint64_t seed = 1;
    std::size_t bk_line_cap = 50'000;              // skip Bron-Kerbosch above this many lines
    std::uint64_t triple_limit = 10'000'000;       // sample ternary sweeps above this
    std::uint64_t triple_samples = 1'000'000;
    int lambda = 2;                                 // homology scalar
    std::filesystem::path output = "spine-out";
    std::filesystem::path cache;                    // empty: caching off

    spine::SpineParams params() const { return spine::SpineParams::make(q, n, k, m, w); }
    std::vector<spine::Delta> deltas() const;
};

// Overrides set by command-line flags; unset fields keep the file value.
struct ConfigOverrides {
    std::optional<int> q, n, k, m, w, lambda;
    std::optional<std::string> delta;
    std::optional<std::uint64_t> seed, triple_limit, triple_samples;
    std::optional<std::size_t> bk_line_cap;
    std::optional<std::string> output, cache;
};

DeltaChoice parse_delta(const std::string& s);
std::string to_string(DeltaChoice d);

// Throws spine::InputError on unknown keys or wrong types.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& file);
RunConfig apply_overrides(RunConfig c, const ConfigOverrides& o);

// The fields that determine results, in a fixed key order. Paths are left out.
nlohmann::json canonical_json(const RunConfig& c);
// FNV-1a over the geometry parameters, as 16 hex digits.
std::string geometry_digest(const RunConfig& c);

}  // namespace spinectl
