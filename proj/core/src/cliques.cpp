#include "spine/cliques.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "spine/errors.hpp"

namespace spine {
namespace {

std::vector<LineId> intersect_sorted(std::span<const LineId> a, std::span<const LineId> b) {
    std::vector<LineId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Clique sorted_unique(std::vector<LineId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

class BronKerbosch {
public:
    explicit BronKerbosch(const LineGraph& g) : g_(g) {}

    std::vector<Clique> run() {
        const auto order = degeneracy_order();
        std::vector<std::size_t> pos(g_.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
        for (LineId v : order) {
            std::vector<LineId> p, x;
            for (LineId u : g_.neighbours(v)) (pos[u] > pos[v] ? p : x).push_back(u);
            std::vector<LineId> r{v};
            expand(r, std::move(p), std::move(x));
        }
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    std::vector<LineId> degeneracy_order() const {
        const std::size_t n = g_.size();
        std::vector<std::size_t> deg(n);
        std::set<std::pair<std::size_t, LineId>> queue;
        for (LineId v = 0; v < n; ++v) {
            deg[v] = g_.neighbours(v).size();
            queue.emplace(deg[v], v);
        }
        std::vector<bool> removed(n, false);
        std::vector<LineId> order;
        order.reserve(n);
        while (!queue.empty()) {
            auto [d, v] = *queue.begin();
            queue.erase(queue.begin());
            removed[v] = true;
            order.push_back(v);
            for (LineId u : g_.neighbours(v)) {
                if (removed[u]) continue;
                queue.erase({deg[u], u});
                queue.emplace(--deg[u], u);
            }
        }
        return order;
    }

    void expand(std::vector<LineId>& r, std::vector<LineId> p, std::vector<LineId> x) {
        if (p.empty()) {
            if (x.empty()) out_.push_back(sorted_unique(r));
            return;
        }
        std::sort(p.begin(), p.end());
        std::sort(x.begin(), x.end());
        LineId pivot = p.front();
        std::size_t best = 0;
        for (const auto* side : {&p, &x})
            for (LineId u : *side) {
                const std::size_t c = intersect_sorted(p, g_.neighbours(u)).size();
                if (c > best || (c == best && u < pivot)) {
                    best = c;
                    pivot = u;
                }
            }
        std::vector<LineId> candidates;
        for (LineId v : p)
            if (!g_.adjacent(pivot, v)) candidates.push_back(v);
        for (LineId v : candidates) {
            r.push_back(v);
            expand(r, intersect_sorted(p, g_.neighbours(v)), intersect_sorted(x, g_.neighbours(v)));
            r.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }

    const LineGraph& g_;
    std::vector<Clique> out_;
};

}  // namespace

bool contains_all(std::span<const LineId> sorted_set, std::span<const LineId> items) {
    return std::all_of(items.begin(), items.end(),
                       [&](LineId l) { return std::binary_search(sorted_set.begin(), sorted_set.end(), l); });
}

std::vector<LineId> common_neighbours(std::span<const LineId> lines, const LineGraph& g) {
    if (lines.empty()) return {};
    std::vector<LineId> acc(g.neighbours(lines[0]).begin(), g.neighbours(lines[0]).end());
    for (std::size_t i = 1; i < lines.size() && !acc.empty(); ++i) acc = intersect_sorted(acc, g.neighbours(lines[i]));
    return acc;
}

bool is_clique(std::span<const LineId> lines, const LineGraph& g) {
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (!g.adjacent(lines[i], lines[j])) return false;
    return true;
}

bool is_maximal_clique(std::span<const LineId> lines, const LineGraph& g) {
    return !lines.empty() && is_clique(lines, g) && common_neighbours(lines, g).empty();
}

bool delta_n(std::span<const LineId> lines, const LineGraph& g) {
    if (lines.size() < 3) return false;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (lines[i] == lines[j] || !g.adjacent(lines[i], lines[j])) return false;
    return is_clique(common_neighbours(lines, g), g);
}

Clique span_clique(LineId a, LineId b, LineId c, const LineGraph& g) {
    const LineId t[3] = {a, b, c};
    if (!delta_n(t, g)) throw ContractError("span_clique: generators do not satisfy the spanning predicate");
    auto s = common_neighbours(t, g);
    s.insert(s.end(), {a, b, c});
    return sorted_unique(std::move(s));
}

SpannedFamily family_K(const LineGraph& g) {
    SpannedFamily fam;
    std::set<Clique> found;
    const auto n = static_cast<LineId>(g.size());
    for (LineId a = 0; a < n; ++a) {
        for (LineId b : g.neighbours(a)) {
            if (b <= a) continue;
            for (LineId c : intersect_sorted(g.neighbours(a), g.neighbours(b))) {
                if (c <= b) continue;
                if (!delta3(a, b, c, g)) continue;
                ++fam.generating_triples;
                Clique k = span_clique(a, b, c, g);
                if (found.contains(k)) continue;
                if (!is_maximal_clique(k, g)) {
                    ++fam.non_maximal_spans;
                    if (fam.witness.empty())
                        fam.witness = "span of " + std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + " is not maximal";
                }
                found.insert(std::move(k));
            }
        }
    }
    fam.cliques.assign(found.begin(), found.end());
    return fam;
}

bool podmianka(std::span<const LineId> k, const LineGraph& g) {
    if (!is_maximal_clique(k, g)) throw ContractError("podmianka: input is not a maximal clique");
    std::vector<LineId> rest;
    for (std::size_t i = 0; i < k.size(); ++i) {
        rest.assign(k.begin(), k.end());
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        for (LineId l2 : common_neighbours(rest, g)) {
            if (l2 == k[i]) continue;
            std::vector<LineId> swapped = rest;
            swapped.push_back(l2);
            if (common_neighbours(swapped, g).empty()) return true;
        }
    }
    return false;
}

std::vector<Clique> bron_kerbosch(const LineGraph& g) { return BronKerbosch(g).run(); }

CliqueIndex::CliqueIndex(std::vector<Clique> family, std::size_t line_count)
    : family_(std::move(family)), by_line_(line_count) {
    for (std::uint32_t i = 0; i < family_.size(); ++i)
        for (LineId l : family_[i]) by_line_[l].push_back(i);
}

std::vector<std::uint32_t> CliqueIndex::containing_all(std::span<const LineId> lines) const {
    std::vector<std::uint32_t> out;
    if (lines.empty()) return out;
    for (std::uint32_t i : by_line_[lines[0]])
        if (contains_all(family_[i], lines)) out.push_back(i);
    return out;
}

}  // namespace spine
