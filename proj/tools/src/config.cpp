#include "spinectl/config.hpp"

#include <cstdio>
#include <fstream>

#include "spine/errors.hpp"

namespace spinectl {

using nlohmann::json;

std::vector<spine::Delta> RunConfig::deltas() const {
    switch (delta) {
        case DeltaChoice::pi: return {spine::Delta::pi};
        case DeltaChoice::rho: return {spine::Delta::rho};
        case DeltaChoice::both: break;
    }
    return {spine::Delta::pi, spine::Delta::rho};
}

DeltaChoice parse_delta(const std::string& s) {
    if (s == "pi") return DeltaChoice::pi;
    if (s == "rho") return DeltaChoice::rho;
    if (s == "both") return DeltaChoice::both;
    throw spine::InputError("delta must be pi, rho or both, got '" + s + "'");
}

std::string to_string(DeltaChoice d) {
    switch (d) {
        case DeltaChoice::pi: return "pi";
        case DeltaChoice::rho: return "rho";
        case DeltaChoice::both: return "both";
    }
    return "?";
}

RunConfig config_from_json(const json& j, RunConfig c) {
    if (!j.is_object()) throw spine::InputError("config must be a JSON object");
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "q") c.q = v.get<int>();
            else if (key == "n") c.n = v.get<int>();
            else if (key == "k") c.k = v.get<int>();
            else if (key == "m") c.m = v.get<int>();
            else if (key == "w") c.w = v.get<int>();
            else if (key == "delta") c.delta = parse_delta(v.get<std::string>());
            else if (key == "seed") c.seed = v.get<std::uint64_t>();
            else if (key == "bk_line_cap") c.bk_line_cap = v.get<std::size_t>();
            else if (key == "triple_limit") c.triple_limit = v.get<std::uint64_t>();
            else if (key == "triple_samples") c.triple_samples = v.get<std::uint64_t>();
            else if (key == "lambda") c.lambda = v.get<int>();
            else if (key == "output") c.output = v.get<std::string>();
            else if (key == "cache") c.cache = v.get<std::string>();
            else throw spine::InputError("unknown config key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw spine::InputError(std::string("bad config value: ") + e.what());
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw spine::InputError("cannot open config " + file.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw spine::InputError("config " + file.string() + " is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

RunConfig apply_overrides(RunConfig c, const ConfigOverrides& o) {
    if (o.q) c.q = *o.q;
    if (o.n) c.n = *o.n;
    if (o.k) c.k = *o.k;
    if (o.m) c.m = *o.m;
    if (o.w) c.w = *o.w;
    if (o.lambda) c.lambda = *o.lambda;
    if (o.delta) c.delta = parse_delta(*o.delta);
    if (o.seed) c.seed = *o.seed;
    if (o.triple_limit) c.triple_limit = *o.triple_limit;
    if (o.triple_samples) c.triple_samples = *o.triple_samples;
    if (o.bk_line_cap) c.bk_line_cap = *o.bk_line_cap;
    if (o.output) c.output = *o.output;
    if (o.cache) c.cache = *o.cache;
    return c;
}

json canonical_json(const RunConfig& c) {
    return json{{"q", c.q},
                {"n", c.n},
                {"k", c.k},
                {"m", c.m},
                {"w", c.w},
                {"delta", to_string(c.delta)},
                {"seed", c.seed},
                {"bk_line_cap", c.bk_line_cap},
                {"triple_limit", c.triple_limit},
                {"triple_samples", c.triple_samples},
                {"lambda", c.lambda}};
}

std::string geometry_digest(const RunConfig& c) {
    const std::string key = "q=" + std::to_string(c.q) + ";n=" + std::to_string(c.n) + ";k=" + std::to_string(c.k) +
                            ";m=" + std::to_string(c.m) + ";w=" + std::to_string(c.w);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace spinectl
