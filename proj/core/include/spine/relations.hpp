#pragma once

// Coplanarity (pi) and same-pencil (rho) relations on lines, and the stripped
// abstract graph that the reconstruction pipeline consumes.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spine/spine_space.hpp"

namespace spine {

enum class Delta { pi, rho };
std::string_view to_string(Delta d) noexcept;

// Symmetric irreflexive adjacency on dense line ids. Adjacency bits are a
// packed lower-triangular matrix; sorted neighbour lists sit beside it.
class LineGraph {
public:
    LineGraph() = default;

    // Throws InputError on out-of-range ids or self loops. Duplicate edges are merged.
    static LineGraph from_edges(std::size_t n, Delta kind, std::vector<std::pair<LineId, LineId>> edges);

    std::size_t size() const noexcept { return n_; }
    Delta kind() const noexcept { return kind_; }
    std::size_t edge_count() const noexcept { return edges_; }

    bool adjacent(LineId a, LineId b) const noexcept {
        if (a == b) return false;
        if (a < b) std::swap(a, b);
        const std::uint64_t i = static_cast<std::uint64_t>(a) * (a - 1) / 2 + b;
        return (tri_[i >> 6] >> (i & 63)) & 1U;
    }
    std::span<const LineId> neighbours(LineId a) const noexcept { return adj_[a]; }

    friend bool operator==(const LineGraph& a, const LineGraph& b) {
        return a.n_ == b.n_ && a.kind_ == b.kind_ && a.adj_ == b.adj_;
    }

private:
    std::size_t n_ = 0;
    Delta kind_ = Delta::pi;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> tri_;
    std::vector<std::vector<LineId>> adj_;
};

LineGraph compute_pi(const SpineSpace& s);
LineGraph compute_rho(const SpineSpace& s);
LineGraph compute_relation(const SpineSpace& s, Delta d);

struct StrippedGraph {
    LineGraph graph;
    std::vector<LineId> perm;  // perm[original id] = stripped id
};

// Relabels lines by a seeded permutation (mt19937_64, Fisher-Yates).
StrippedGraph strip(const LineGraph& g, std::uint64_t seed);
std::vector<LineId> invert_permutation(std::span<const LineId> perm);

// Row-wise run lengths, alternating zero-run / one-run and starting with a
// zero-run, e.g. "3,1,5". Every row sums to the line count.
std::vector<std::string> encode_rle(const LineGraph& g);
// Throws InputError on malformed rows, asymmetry or self loops.
LineGraph decode_rle(Delta kind, std::span<const std::string> rows);

}  // namespace spine
