#pragma once

// Verification sweeps that compare abstract results with the geometry.

#include <cstdint>
#include <span>
#include <vector>

#include "spine/excluded.hpp"
#include "spine/pipeline.hpp"

namespace spine {

// Gaussian binomials against subspace enumeration for every q in `qs`,
// 3 <= n <= n_max and 0 <= k <= n.
CheckReport check_gaussian_binomials(std::span<const int> qs, int n_max);

// Maximal cliques of g (source ids) against the geometric family for g.kind().
CheckReport check_clique_classification(const GeometryCatalog& cat, const LineGraph& g,
                                        std::span<const Clique> maximal);

// The exchange test holds exactly on semiaffine semiflats among maximal rho-cliques.
CheckReport check_exchange(const GeometryCatalog& cat, const LineGraph& rho, std::span<const Clique> maximal);

struct TripleSweep {
    std::uint64_t exhaustive_limit = 10'000'000;  // above this, sample
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
};

// Over all triples inside each maximal clique: the ternary pencil predicate
// holds iff the triple lies in a pencil (proper or parallel for pi, proper
// for rho).
CheckReport check_ternary_pencils(const GeometryCatalog& cat, const LineGraph& g, std::span<const Clique> maximal,
                                  const TripleSweep& sweep = {});

// 𝒫 pulled back through `perm` equals the proper geometric pencils.
CheckReport check_pencil_family(const GeometryCatalog& cat, const AbstractRun& run, std::span<const LineId> perm);

// Every spanned clique is a maximal clique.
CheckReport check_spanned_maximal(const SpannedFamily& k);

CheckReport to_check(std::string name, const UpsilonClasses& c);
CheckReport to_check(std::string name, const UpsilonGeometryReport& r);
std::vector<CheckReport> to_checks(const EquivalenceReport& r);
std::vector<CheckReport> to_checks(const CounterexampleReport& r);

}  // namespace spine
