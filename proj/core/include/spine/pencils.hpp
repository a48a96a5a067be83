#pragma once

// Pencils of lines recovered from a line graph: ternary concurrency, pencil
// families, parallel-pencil elimination and clique dimension.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spine/cliques.hpp"

namespace spine {

// Pairwise coplanar and not spanning.
bool p_pi(LineId a, LineId b, LineId c, const LineGraph& pi);

// Spanned maximal rho-cliques with their exchange flags, indexed by line.
class RhoWitnessIndex {
public:
    explicit RhoWitnessIndex(const LineGraph& rho);
    RhoWitnessIndex(const LineGraph& rho, std::vector<Clique> spanned);

    // Some spanned clique without the exchange property contains a, b, c.
    bool exchange_free_container(LineId a, LineId b, LineId c) const;
    const std::vector<Clique>& cliques() const noexcept { return index_.family(); }
    bool exchange(std::size_t i) const { return exchange_[i]; }

private:
    CliqueIndex index_;
    std::vector<bool> exchange_;
};

// Distinct lines inside an exchange-free spanned clique that do not span.
bool p_rho(LineId a, LineId b, LineId c, const LineGraph& rho, const RhoWitnessIndex& witnesses);

struct PencilFamily {
    std::vector<Clique> pencils;          // sorted
    std::uint64_t positive_triples = 0;
    std::uint64_t inconsistent = 0;       // closures containing a negative triple
    std::string witness;
};

// Closes each positive triple under lines that are concurrent with two
// members, then deduplicates. Uses p_pi or p_rho according to g.kind().
PencilFamily family_P(const LineGraph& g);
PencilFamily family_P(const LineGraph& g, const RhoWitnessIndex& witnesses);

// Every line of p1 is coplanar with (or equal to) every line of p2.
bool pencil_coplanar(std::span<const LineId> p1, std::span<const LineId> p2, const LineGraph& pi);

struct ParallelDetection {
    std::vector<Clique> parallel;  // sorted
    std::vector<Clique> proper;    // pencils minus parallel, sorted
    std::size_t affine_planes = 0;
};

// Splits pi-pencils into parallel pencils and pencils of lines.
//
// A maximal clique counts as an affine plane when the linear space formed by
// its pencils plus its uncovered line pairs has dimension 2 and two disjoint
// blocks. Then (a) a pencil lies on an affine plane iff it sits in such a
// clique, (b) a line does iff one of its pencils does, (c) a pencil off affine
// planes whose lines all lie on affine planes is parallel, and (d) coplanar
// disjoint pencils inside an affine plane are parallel.
ParallelDetection detect_parallel(std::span<const Clique> pencils, const LineGraph& pi);
ParallelDetection detect_parallel(std::span<const Clique> pencils, const LineGraph& pi,
                                  std::span<const Clique> maximal_cliques);

// Generating rank minus one: the smallest set of points whose closure under
// the blocks (a block with two points inside joins whole) is all of `points`.
// Independent of how the points are labelled. Blocks with fewer than three
// points in `points` never add anything and are ignored.
int span_dimension(std::span<const LineId> points, std::span<const Clique> blocks);

// Throws ContractError if no pencil lies inside the clique.
int clique_dimension(std::span<const LineId> k, std::span<const Clique> pencils_in_k);

// Pencils of the family that lie inside `k`.
std::vector<Clique> pencils_inside(std::span<const LineId> k, const CliqueIndex& pencils);

struct DimensionedClique {
    Clique lines;
    int dim = 0;
};

// Cliques containing at least one pencil, with their dimensions.
std::vector<DimensionedClique> family_K0(std::span<const Clique> cliques, std::span<const Clique> pencils,
                                         std::size_t line_count);
// Members of dimension at least 3.
std::vector<DimensionedClique> family_B(std::span<const DimensionedClique> k0);

}  // namespace spine
