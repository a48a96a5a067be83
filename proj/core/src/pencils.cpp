#include "spine/pencils.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "spine/errors.hpp"

namespace spine {
namespace {

std::uint64_t pair_key(LineId a, LineId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool disjoint(std::span<const LineId> a, std::span<const LineId> b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

template <class Pred>
PencilFamily close_triples(const LineGraph& g, Pred positive) {
    PencilFamily fam;
    std::set<Clique> found;
    std::unordered_map<std::uint64_t, std::uint32_t> pair_owner;
    std::vector<Clique> order;
    const auto n = static_cast<LineId>(g.size());
    for (LineId a = 0; a < n; ++a) {
        for (LineId b : g.neighbours(a)) {
            if (b <= a) continue;
            std::vector<LineId> ab;
            std::set_intersection(g.neighbours(a).begin(), g.neighbours(a).end(), g.neighbours(b).begin(),
                                  g.neighbours(b).end(), std::back_inserter(ab));
            for (LineId c : ab) {
                if (c <= b) continue;
                if (!positive(a, b, c)) continue;
                ++fam.positive_triples;
                if (auto it = pair_owner.find(pair_key(a, b)); it != pair_owner.end()) {
                    const auto& p = order[it->second];
                    if (std::binary_search(p.begin(), p.end(), c)) continue;
                }
                // Grow the triple by lines concurrent with two members.
                Clique s{a, b, c};
                for (bool grew = true; grew;) {
                    grew = false;
                    for (std::size_t i = 0; i < s.size() && !grew; ++i)
                        for (std::size_t j = i + 1; j < s.size() && !grew; ++j) {
                            std::vector<LineId> cand;
                            std::set_intersection(g.neighbours(s[i]).begin(), g.neighbours(s[i]).end(),
                                                  g.neighbours(s[j]).begin(), g.neighbours(s[j]).end(),
                                                  std::back_inserter(cand));
                            for (LineId x : cand) {
                                if (std::binary_search(s.begin(), s.end(), x)) continue;
                                if (!positive(x, s[i], s[j])) continue;
                                s.insert(std::lower_bound(s.begin(), s.end(), x), x);
                                grew = true;
                                break;
                            }
                        }
                }
                bool consistent = true;
                for (std::size_t i = 0; i < s.size() && consistent; ++i)
                    for (std::size_t j = i + 1; j < s.size() && consistent; ++j)
                        for (std::size_t t = j + 1; t < s.size() && consistent; ++t)
                            consistent = positive(s[i], s[j], s[t]);
                if (!consistent) {
                    ++fam.inconsistent;
                    if (fam.witness.empty())
                        fam.witness = "closure of " + std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + " contains a negative triple";
                }
                if (!found.insert(s).second) continue;
                const auto id = static_cast<std::uint32_t>(order.size());
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j) pair_owner.emplace(pair_key(s[i], s[j]), id);
                order.push_back(std::move(s));
            }
        }
    }
    fam.pencils.assign(found.begin(), found.end());
    return fam;
}

}  // namespace

bool p_pi(LineId a, LineId b, LineId c, const LineGraph& pi) {
    return pi.adjacent(a, b) && pi.adjacent(a, c) && pi.adjacent(b, c) && !delta3(a, b, c, pi);
}

RhoWitnessIndex::RhoWitnessIndex(const LineGraph& rho) : RhoWitnessIndex(rho, family_K(rho).cliques) {}

RhoWitnessIndex::RhoWitnessIndex(const LineGraph& rho, std::vector<Clique> spanned)
    : index_(std::move(spanned), rho.size()) {
    exchange_.reserve(index_.family().size());
    for (const auto& k : index_.family()) exchange_.push_back(podmianka(k, rho));
}

bool RhoWitnessIndex::exchange_free_container(LineId a, LineId b, LineId c) const {
    const LineId t[3] = {a, b, c};
    for (std::uint32_t i : index_.containing_all(t))
        if (!exchange_[i]) return true;
    return false;
}

bool p_rho(LineId a, LineId b, LineId c, const LineGraph& rho, const RhoWitnessIndex& witnesses) {
    if (a == b || a == c || b == c) return false;
    if (delta3(a, b, c, rho)) return false;
    return witnesses.exchange_free_container(a, b, c);
}

PencilFamily family_P(const LineGraph& g) {
    if (g.kind() == Delta::pi) return close_triples(g, [&g](LineId a, LineId b, LineId c) { return p_pi(a, b, c, g); });
    const RhoWitnessIndex w(g);
    return family_P(g, w);
}

PencilFamily family_P(const LineGraph& g, const RhoWitnessIndex& witnesses) {
    return close_triples(g, [&](LineId a, LineId b, LineId c) { return p_rho(a, b, c, g, witnesses); });
}

bool pencil_coplanar(std::span<const LineId> p1, std::span<const LineId> p2, const LineGraph& pi) {
    for (LineId a : p1)
        for (LineId b : p2)
            if (a != b && !pi.adjacent(a, b)) return false;
    return true;
}

int span_dimension(std::span<const LineId> points, std::span<const Clique> blocks) {
    std::vector<LineId> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n == 0) return -1;
    const std::size_t words = (n + 63) / 64;
    using Mask = std::vector<std::uint64_t>;
    auto set_bit = [](Mask& m, std::size_t i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); };

    std::vector<Mask> masks;
    for (const auto& blk : blocks) {
        Mask m(words, 0);
        std::size_t inside = 0;
        for (LineId l : blk) {
            auto it = std::lower_bound(pts.begin(), pts.end(), l);
            if (it == pts.end() || *it != l) continue;
            set_bit(m, static_cast<std::size_t>(it - pts.begin()));
            ++inside;
        }
        if (inside >= 3) masks.push_back(std::move(m));
    }
    Mask full(words, 0);
    for (std::size_t i = 0; i < n; ++i) set_bit(full, i);

    auto closes = [&](Mask s) {
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& b : masks) {
                int meet = 0;
                bool subset = true;
                for (std::size_t w = 0; w < words; ++w) {
                    meet += std::popcount(s[w] & b[w]);
                    subset = subset && (b[w] & ~s[w]) == 0;
                }
                if (meet >= 2 && !subset) {
                    for (std::size_t w = 0; w < words; ++w) s[w] |= b[w];
                    grew = true;
                }
            }
        }
        return s == full;
    };

    // Smallest generating set, by subsets of increasing size.
    std::vector<std::size_t> pick;
    for (std::size_t r = 1; r <= n; ++r) {
        pick.resize(r);
        for (std::size_t i = 0; i < r; ++i) pick[i] = i;
        for (;;) {
            Mask s(words, 0);
            for (auto i : pick) set_bit(s, i);
            if (closes(std::move(s))) return static_cast<int>(r) - 1;
            std::size_t i = r;
            while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return static_cast<int>(n) - 1;
}

int clique_dimension(std::span<const LineId> k, std::span<const Clique> pencils_in_k) {
    if (pencils_in_k.empty()) throw ContractError("clique_dimension: no pencil inside the clique");
    return span_dimension(k, pencils_in_k);
}

std::vector<Clique> pencils_inside(std::span<const LineId> k, const CliqueIndex& pencils) {
    std::set<std::uint32_t> ids;
    for (LineId l : k)
        for (std::uint32_t p : pencils.containing(l))
            if (contains_all(k, pencils.family()[p])) ids.insert(p);
    std::vector<Clique> out;
    for (auto i : ids) out.push_back(pencils.family()[i]);
    return out;
}

ParallelDetection detect_parallel(std::span<const Clique> pencils, const LineGraph& pi) {
    const auto k = family_K(pi).cliques;
    return detect_parallel(pencils, pi, k);
}

ParallelDetection detect_parallel(std::span<const Clique> pencils, const LineGraph& pi,
                                  std::span<const Clique> maximal_cliques) {
    ParallelDetection out;
    const CliqueIndex pindex(std::vector<Clique>(pencils.begin(), pencils.end()), pi.size());
    std::unordered_set<std::uint64_t> covered;
    for (const auto& p : pencils)
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) covered.insert(pair_key(p[i], p[j]));

    std::vector<bool> on_affine(pencils.size(), false);
    std::set<std::uint32_t> parallel;
    for (const auto& kq : maximal_cliques) {
        std::vector<std::uint32_t> inside;
        for (LineId l : kq)
            for (std::uint32_t p : pindex.containing(l))
                if (contains_all(kq, pencils[p])) inside.push_back(p);
        std::sort(inside.begin(), inside.end());
        inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
        if (inside.empty()) continue;
        std::vector<Clique> blocks;
        for (auto p : inside) blocks.push_back(pencils[p]);
        for (std::size_t i = 0; i < kq.size(); ++i)
            for (std::size_t j = i + 1; j < kq.size(); ++j)
                if (!covered.contains(pair_key(kq[i], kq[j]))) blocks.push_back({kq[i], kq[j]});
        bool has_disjoint = false;
        for (std::size_t i = 0; i < blocks.size() && !has_disjoint; ++i)
            for (std::size_t j = i + 1; j < blocks.size() && !has_disjoint; ++j)
                has_disjoint = disjoint(blocks[i], blocks[j]);
        if (!has_disjoint || span_dimension(kq, blocks) != 2) continue;
        ++out.affine_planes;
        for (auto p : inside) on_affine[p] = true;
        // (d) coplanar disjoint pencils of an affine plane
        for (std::size_t i = 0; i < inside.size(); ++i)
            for (std::size_t j = i + 1; j < inside.size(); ++j) {
                const auto& a = pencils[inside[i]];
                const auto& b = pencils[inside[j]];
                if (disjoint(a, b) && pencil_coplanar(a, b, pi)) {
                    parallel.insert(inside[i]);
                    parallel.insert(inside[j]);
                }
            }
    }
    std::vector<bool> line_on_affine(pi.size(), false);
    for (std::size_t p = 0; p < pencils.size(); ++p)
        if (on_affine[p])
            for (LineId l : pencils[p]) line_on_affine[l] = true;
    // (c) pencils off affine planes made only of lines on affine planes
    for (std::uint32_t p = 0; p < pencils.size(); ++p) {
        if (on_affine[p]) continue;
        if (std::all_of(pencils[p].begin(), pencils[p].end(), [&](LineId l) { return line_on_affine[l]; }))
            parallel.insert(p);
    }
    for (std::uint32_t p = 0; p < pencils.size(); ++p)
        (parallel.contains(p) ? out.parallel : out.proper).push_back(pencils[p]);
    std::sort(out.parallel.begin(), out.parallel.end());
    std::sort(out.proper.begin(), out.proper.end());
    return out;
}

std::vector<DimensionedClique> family_K0(std::span<const Clique> cliques, std::span<const Clique> pencils,
                                         std::size_t line_count) {
    const CliqueIndex pindex(std::vector<Clique>(pencils.begin(), pencils.end()), line_count);
    std::vector<DimensionedClique> out;
    for (const auto& k : cliques) {
        auto inside = pencils_inside(k, pindex);
        if (inside.empty()) continue;
        out.push_back(DimensionedClique{k, clique_dimension(k, inside)});
    }
    return out;
}

std::vector<DimensionedClique> family_B(std::span<const DimensionedClique> k0) {
    std::vector<DimensionedClique> out;
    for (const auto& c : k0)
        if (c.dim >= 3) out.push_back(c);
    return out;
}

}  // namespace spine
