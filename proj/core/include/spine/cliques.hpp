#pragma once

// Clique machinery on an abstract line graph: the spanning predicate Δn,
// spanned maximal cliques, the spanned family, the exchange test and a
// Bron–Kerbosch oracle. Nothing here looks at geometry.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spine/relations.hpp"

namespace spine {

// Sorted, duplicate-free set of line ids.
using Clique = std::vector<LineId>;

// Lines adjacent to every member of `lines` (members themselves excluded), sorted.
std::vector<LineId> common_neighbours(std::span<const LineId> lines, const LineGraph& g);

bool is_clique(std::span<const LineId> lines, const LineGraph& g);
bool is_maximal_clique(std::span<const LineId> lines, const LineGraph& g);

// n pairwise distinct, pairwise adjacent lines whose common neighbours are
// pairwise adjacent. Identically false for n < 3.
bool delta_n(std::span<const LineId> lines, const LineGraph& g);
inline bool delta3(LineId a, LineId b, LineId c, const LineGraph& g) {
    const LineId t[3] = {a, b, c};
    return delta_n(t, g);
}

// Common neighbours plus the generators. Throws ContractError unless Δ3 holds.
Clique span_clique(LineId a, LineId b, LineId c, const LineGraph& g);

struct SpannedFamily {
    std::vector<Clique> cliques;        // sorted
    std::uint64_t generating_triples = 0;
    std::uint64_t non_maximal_spans = 0;  // spans that failed maximality
    std::string witness;
};

// Spans of all Δ3 triples, deduplicated.
SpannedFamily family_K(const LineGraph& g);

// True iff a single-line exchange turns `k` into another maximal clique.
// Throws ContractError if `k` is not a maximal clique.
bool podmianka(std::span<const LineId> k, const LineGraph& g);

// All maximal cliques, Tomita pivoting over a degeneracy ordering. Sorted.
std::vector<Clique> bron_kerbosch(const LineGraph& g);

// Index of which family members contain each line.
class CliqueIndex {
public:
    CliqueIndex(std::vector<Clique> family, std::size_t line_count);
    std::span<const std::uint32_t> containing(LineId l) const noexcept { return by_line_[l]; }
    // Members containing all of `lines`.
    std::vector<std::uint32_t> containing_all(std::span<const LineId> lines) const;
    const std::vector<Clique>& family() const noexcept { return family_; }

private:
    std::vector<Clique> family_;
    std::vector<std::vector<std::uint32_t>> by_line_;
};

bool contains_all(std::span<const LineId> sorted_set, std::span<const LineId> items);

}  // namespace spine
