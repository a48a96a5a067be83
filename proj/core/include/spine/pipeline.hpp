#pragma once

// The abstract pipeline: from a bare line graph to cliques, pencils, ℬ and
// the bundle reconstruction.

#include <optional>
#include <span>
#include <vector>

#include "spine/bundles.hpp"
#include "spine/pencils.hpp"

namespace spine {

struct AbstractOptions {
    bool reconstruct = true;
};

struct AbstractRun {
    Delta delta = Delta::pi;
    SpannedFamily spanned;                    // 𝒦
    PencilFamily ternary;                     // 𝒫_δ
    std::optional<ParallelDetection> parallel;  // pi only
    std::vector<Clique> pencils;              // 𝒫
    std::vector<DimensionedClique> k0;        // 𝒦0
    std::vector<DimensionedClique> b;         // ℬ
    Reconstruction recon;                     // attempted only when asked
};

AbstractRun run_abstract(const LineGraph& g, const AbstractOptions& opts = {});

// Relabels every clique through `map` (map[old] = new) and sorts the result.
std::vector<Clique> map_cliques(std::span<const Clique> cliques, std::span<const LineId> map);

}  // namespace spine
