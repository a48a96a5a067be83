#include "spine/relations.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>

#include "spine/errors.hpp"

namespace spine {

std::string_view to_string(Delta d) noexcept { return d == Delta::pi ? "pi" : "rho"; }

LineGraph LineGraph::from_edges(std::size_t n, Delta kind, std::vector<std::pair<LineId, LineId>> edges) {
    LineGraph g;
    g.n_ = n;
    g.kind_ = kind;
    const std::uint64_t bits = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
    g.tri_.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
    g.adj_.assign(n, {});
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) throw InputError("edge endpoint out of range");
        if (a == b) throw InputError("self loop in line relation");
        if (a < b) std::swap(a, b);
        const std::uint64_t i = static_cast<std::uint64_t>(a) * (a - 1) / 2 + b;
        if ((g.tri_[i >> 6] >> (i & 63)) & 1U) continue;
        g.tri_[i >> 6] |= std::uint64_t{1} << (i & 63);
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
        ++g.edges_;
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    return g;
}

LineGraph compute_relation(const SpineSpace& s, Delta d) {
    std::vector<std::pair<LineId, LineId>> edges;
    std::set<Subspace> seen_h, seen_b;
    auto scan = [&](std::span<const LineId> group) {
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                auto mp = s.meeting_point(group[i], group[j]);
                if (!mp) continue;
                if (d == Delta::rho && !s.is_proper(*mp)) continue;
                edges.emplace_back(group[i], group[j]);
            }
    };
    for (const auto& l : s.lines()) {
        if (seen_h.insert(l.h).second) scan(s.lines_with_lower(l.h));
        if (seen_b.insert(l.b).second) scan(s.lines_with_upper(l.b));
    }
    return LineGraph::from_edges(s.lines().size(), d, std::move(edges));
}

LineGraph compute_pi(const SpineSpace& s) { return compute_relation(s, Delta::pi); }
LineGraph compute_rho(const SpineSpace& s) { return compute_relation(s, Delta::rho); }

StrippedGraph strip(const LineGraph& g, std::uint64_t seed) {
    const std::size_t n = g.size();
    std::vector<LineId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<LineId>(i);
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(perm[i - 1], perm[j]);
    }
    std::vector<std::pair<LineId, LineId>> edges;
    edges.reserve(g.edge_count());
    for (LineId a = 0; a < n; ++a)
        for (LineId b : g.neighbours(a))
            if (a < b) edges.emplace_back(perm[a], perm[b]);
    return StrippedGraph{LineGraph::from_edges(n, g.kind(), std::move(edges)), std::move(perm)};
}

std::vector<LineId> invert_permutation(std::span<const LineId> perm) {
    std::vector<LineId> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<LineId>(i);
    return inv;
}

std::vector<std::string> encode_rle(const LineGraph& g) {
    std::vector<std::string> rows;
    rows.reserve(g.size());
    const auto n = static_cast<LineId>(g.size());
    for (LineId a = 0; a < n; ++a) {
        std::string row;
        LineId pos = 0;
        for (LineId b : g.neighbours(a)) {
            // zero-run up to b, then count the consecutive ones from b
            if (b < pos) continue;
            LineId end = b;
            while (end + 1 < n && g.adjacent(a, end + 1)) ++end;
            row += std::to_string(b - pos) + "," + std::to_string(end - b + 1) + ",";
            pos = end + 1;
        }
        row += std::to_string(n - pos);
        rows.push_back(std::move(row));
    }
    return rows;
}

LineGraph decode_rle(Delta kind, std::span<const std::string> rows) {
    const std::size_t n = rows.size();
    std::vector<std::pair<LineId, LineId>> edges;
    std::vector<std::vector<LineId>> adj(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::string& row = rows[a];
        std::size_t pos = 0;
        bool ones = false;
        const char* p = row.data();
        const char* end = row.data() + row.size();
        while (p < end) {
            std::size_t len = 0;
            auto [next, ec] = std::from_chars(p, end, len);
            if (ec != std::errc{}) throw InputError("malformed run-length row " + std::to_string(a));
            if (pos + len > n) throw InputError("run-length row " + std::to_string(a) + " overflows");
            if (ones)
                for (std::size_t b = pos; b < pos + len; ++b) adj[a].push_back(static_cast<LineId>(b));
            pos += len;
            ones = !ones;
            p = next;
            if (p < end) {
                if (*p != ',') throw InputError("malformed run-length row " + std::to_string(a));
                ++p;
            }
        }
        if (pos != n) throw InputError("run-length row " + std::to_string(a) + " does not cover all lines");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (LineId b : adj[a]) {
            if (b == a) throw InputError("self loop in run-length adjacency");
            if (!std::binary_search(adj[b].begin(), adj[b].end(), static_cast<LineId>(a)))
                throw InputError("asymmetric run-length adjacency");
            if (a < b) edges.emplace_back(static_cast<LineId>(a), b);
        }
    return LineGraph::from_edges(n, kind, std::move(edges));
}

}  // namespace spine
