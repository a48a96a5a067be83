#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spine/checks.hpp"
#include "spinectl/cache.hpp"
#include "spinectl/config.hpp"

namespace spinectl {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification = 1;
inline constexpr int exit_config = 2;

// Lazily built artifacts shared by the commands of one invocation.
class Session {
public:
    explicit Session(RunConfig c);

    const RunConfig& config() const noexcept { return config_; }
    const spine::GateReport& gate() const noexcept { return gate_; }
    const spine::SpineSpace& space();
    const spine::GeometryCatalog& catalog();
    const spine::LineGraph& relation(spine::Delta d);
    const spine::StrippedGraph& stripped(spine::Delta d);
    const std::vector<spine::Clique>& maximal_cliques(spine::Delta d);  // Bron-Kerbosch, source ids
    const spine::AbstractRun& abstract(spine::Delta d, bool reconstruct);
    std::size_t cache_hits() const noexcept { return cache_hits_; }

private:
    RunConfig config_;
    spine::GateReport gate_;
    GraphCache cache_;
    std::optional<spine::SpineSpace> space_;
    std::optional<spine::GeometryCatalog> catalog_;
    std::map<spine::Delta, spine::LineGraph> relations_;
    std::map<spine::Delta, spine::StrippedGraph> stripped_;
    std::map<spine::Delta, std::vector<spine::Clique>> maximal_;
    std::map<spine::Delta, spine::AbstractRun> runs_;
    std::size_t cache_hits_ = 0;
};

struct CommandResult {
    int exit_code = exit_ok;
    nlohmann::json report;                  // deterministic body
    std::vector<std::string> summary;       // human-readable lines
    std::map<std::string, nlohmann::json> artifacts;  // extra files, by file name
};

CommandResult cmd_build(Session& s);
CommandResult cmd_relations(Session& s);
CommandResult cmd_cliques(Session& s);
CommandResult cmd_pencils(Session& s);
CommandResult cmd_reconstruct(Session& s);
CommandResult cmd_counterexample(Session& s);
CommandResult cmd_verify_all(Session& s);

const std::vector<std::string>& command_names();

// Runs a command by name, writes <output>/<command>.json, its artifacts and a
// <command>.meta.json sidecar with timing, prints the summary to `out` and
// returns the exit code. Configuration and gate errors give exit_config.
int run_command(const std::string& name, const RunConfig& c, std::ostream& out);

nlohmann::json check_json(const spine::CheckReport& r);

}  // namespace spinectl
