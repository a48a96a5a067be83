#pragma once

// Brute-force references that share no code with the library: subspaces as
// explicit sets of vectors, vectors as base-q integers.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using VecSet = std::vector<std::uint32_t>;  // sorted codes of every vector in a subspace

inline std::uint32_t power(int q, int e) {
    std::uint32_t r = 1;
    while (e-- > 0) r *= static_cast<std::uint32_t>(q);
    return r;
}

inline std::vector<int> digits(std::uint32_t code, int q, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint32_t>(q));
        code /= static_cast<std::uint32_t>(q);
    }
    return v;
}

inline std::uint32_t code_of(const std::vector<int>& v, int q) {
    std::uint32_t c = 0;
    for (int x : v) c = c * static_cast<std::uint32_t>(q) + static_cast<std::uint32_t>(x);
    return c;
}

inline std::uint32_t add_scaled(std::uint32_t a, std::uint32_t b, int s, int q, int n) {
    auto va = digits(a, q, n), vb = digits(b, q, n);
    for (std::size_t i = 0; i < va.size(); ++i) va[i] = (va[i] + s * vb[i]) % q;
    return code_of(va, q);
}

// Span of an existing subspace and one more vector.
inline VecSet extend(const VecSet& s, std::uint32_t v, int q, int n) {
    std::set<std::uint32_t> out(s.begin(), s.end());
    for (auto x : s)
        for (int c = 1; c < q; ++c) out.insert(add_scaled(x, v, c, q, n));
    return {out.begin(), out.end()};
}

// Every k-subspace, grown one vector at a time from the zero space.
inline std::vector<VecSet> subspaces(int q, int n, int k) {
    std::set<VecSet> layer{{0}};
    const auto total = power(q, n);
    for (int d = 0; d < k; ++d) {
        std::set<VecSet> next;
        for (const auto& s : layer)
            for (std::uint32_t v = 1; v < total; ++v)
                if (!std::binary_search(s.begin(), s.end(), v)) next.insert(extend(s, v, q, n));
        layer = std::move(next);
    }
    return {layer.begin(), layer.end()};
}

inline bool subset(const VecSet& small, const VecSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::size_t meet_size(const VecSet& a, const VecSet& b) {
    std::vector<std::uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.size();
}

// W spanned by the last w standard vectors: codes below q^w.
inline VecSet tail_subspace(int q, int w) {
    VecSet s(power(q, w));
    for (std::uint32_t i = 0; i < s.size(); ++i) s[i] = i;
    return s;
}

struct SpineCounts {
    std::size_t points = 0;
    std::size_t lines = 0;
};

// Points: k-subspaces meeting W in q^m vectors. Lines: pencils (H, B) with at
// least two such points between them.
inline SpineCounts spine_counts(int q, int n, int k, int m, int w) {
    const auto wset = tail_subspace(q, w);
    const auto ks = subspaces(q, n, k);
    std::set<VecSet> proper;
    for (const auto& u : ks)
        if (meet_size(u, wset) == power(q, m)) proper.insert(u);
    SpineCounts c{proper.size(), 0};
    const auto hs = subspaces(q, n, k - 1);
    const auto bs = subspaces(q, n, k + 1);
    for (const auto& b : bs) {
        std::vector<const VecSet*> below;
        for (const auto& u : proper)
            if (subset(u, b)) below.push_back(&u);
        for (const auto& h : hs) {
            if (!subset(h, b)) continue;
            std::size_t on = 0;
            for (const auto* u : below)
                if (subset(h, *u)) ++on;
            if (on >= 2) ++c.lines;
        }
    }
    return c;
}

// Maximal cliques by plain Bron-Kerbosch without pivoting, on an adjacency matrix.
inline void bk_plain(const std::vector<std::vector<bool>>& adj, std::vector<int> r, std::vector<int> p,
                     std::vector<int> x, std::set<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        std::sort(r.begin(), r.end());
        out.insert(r);
        return;
    }
    while (!p.empty()) {
        const int v = p.back();
        std::vector<int> np, nx;
        for (int u : p)
            if (adj[v][u]) np.push_back(u);
        for (int u : x)
            if (adj[v][u]) nx.push_back(u);
        auto nr = r;
        nr.push_back(v);
        bk_plain(adj, nr, np, nx, out);
        p.pop_back();
        x.push_back(v);
    }
}

}  // namespace oracle
