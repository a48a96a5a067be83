#include "spine/pipeline.hpp"

#include <algorithm>

namespace spine {

AbstractRun run_abstract(const LineGraph& g, const AbstractOptions& opts) {
    AbstractRun run;
    run.delta = g.kind();
    run.spanned = family_K(g);
    if (g.kind() == Delta::pi) {
        run.ternary = family_P(g);
        run.parallel = detect_parallel(run.ternary.pencils, g, run.spanned.cliques);
        run.pencils = run.parallel->proper;
    } else {
        const RhoWitnessIndex witnesses(g, run.spanned.cliques);
        run.ternary = family_P(g, witnesses);
        run.pencils = run.ternary.pencils;
    }
    run.k0 = family_K0(run.spanned.cliques, run.pencils, g.size());
    run.b = family_B(run.k0);
    if (opts.reconstruct) run.recon = reconstruct(run.b, g);
    return run;
}

std::vector<Clique> map_cliques(std::span<const Clique> cliques, std::span<const LineId> map) {
    std::vector<Clique> out;
    out.reserve(cliques.size());
    for (const auto& c : cliques) {
        Clique m;
        m.reserve(c.size());
        for (LineId l : c) m.push_back(map[l]);
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spine
