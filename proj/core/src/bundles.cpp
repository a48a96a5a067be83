#include "spine/bundles.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>

namespace spine {
namespace {

bool intersects(std::span<const LineId> a, std::span<const LineId> b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

std::string join(std::span<const LineId> ls) {
    std::string s = "{";
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + std::to_string(ls[i]);
    return s + "}";
}

}  // namespace

bool upsilon(std::span<const LineId> k1, std::span<const LineId> k2, const LineGraph& g) {
    std::size_t related = 0;
    for (LineId l : k1) {
        const bool hit = std::any_of(k2.begin(), k2.end(), [&](LineId m) { return l == m || g.adjacent(l, m); });
        if (hit && ++related >= 2) return true;
    }
    return false;
}

bool upsilon_empty(std::span<const LineId> k1, std::span<const LineId> k2, const LineGraph& g) {
    const bool equal = std::equal(k1.begin(), k1.end(), k2.begin(), k2.end());
    if (!equal && intersects(k1, k2)) return false;
    return upsilon(k1, k2, g) && upsilon(k2, k1, g);
}

UpsilonClasses upsilon_classes(std::span<const DimensionedClique> b, const LineGraph& g) {
    UpsilonClasses out;
    const std::size_t n = b.size();
    std::vector<std::vector<std::uint32_t>> rel(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (upsilon_empty(b[i].lines, b[j].lines, g)) {
                rel[i].push_back(static_cast<std::uint32_t>(j));
                rel[j].push_back(static_cast<std::uint32_t>(i));
                ++out.related_pairs;
            }
    for (auto& r : rel) std::sort(r.begin(), r.end());
    // Only chains a~b~c can break transitivity, so walking them is exhaustive.
    for (std::size_t mid = 0; mid < n; ++mid)
        for (auto a : rel[mid])
            for (auto c : rel[mid]) {
                if (a == c) continue;
                ++out.chained_triples;
                if (!std::binary_search(rel[a].begin(), rel[a].end(), c)) {
                    ++out.transitivity_failures;
                    if (out.witness.empty())
                        out.witness = "members " + std::to_string(a) + "~" + std::to_string(mid) + "~" +
                                      std::to_string(c) + " but not " + std::to_string(a) + "~" + std::to_string(c);
                }
            }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : rel[i]) parent[find_root(parent, j)] = find_root(parent, i);
    std::map<std::size_t, std::uint32_t> label;
    out.class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, _] = label.emplace(find_root(parent, i), static_cast<std::uint32_t>(label.size()));
        out.class_of[i] = it->second;
    }
    out.class_count = label.size();
    return out;
}

Clique bundle_of(std::size_t i, std::span<const DimensionedClique> b, const UpsilonClasses& classes) {
    Clique out;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (classes.class_of[j] == classes.class_of[i]) out.insert(out.end(), b[j].lines.begin(), b[j].lines.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ReconstructedSpace::ReconstructedSpace(std::vector<Clique> bundles, std::size_t line_count)
    : points_(std::move(bundles)), points_on_(line_count) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    for (std::uint32_t p = 0; p < points_.size(); ++p)
        for (LineId l : points_[p]) points_on_[l].push_back(p);
}

bool ReconstructedSpace::incident(std::uint32_t point, LineId l) const {
    return std::binary_search(points_[point].begin(), points_[point].end(), l);
}

bool ReconstructedSpace::collinear(std::span<const std::uint32_t> pts) const {
    if (pts.empty()) return false;
    return std::any_of(points_[pts[0]].begin(), points_[pts[0]].end(), [&](LineId l) {
        return std::all_of(pts.begin() + 1, pts.end(), [&](std::uint32_t p) { return incident(p, l); });
    });
}

std::optional<std::uint32_t> ReconstructedSpace::find(const Clique& bundle) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), bundle);
    if (it == points_.end() || *it != bundle) return std::nullopt;
    return static_cast<std::uint32_t>(it - points_.begin());
}

CheckReport ReconstructedSpace::check_linear_space() const {
    CheckReport r{"reconstructed-linear-space", true, 0, 0, {}};
    for (LineId l = 0; l < points_on_.size(); ++l) {
        ++r.checked;
        if (points_on_[l].size() < 2) {
            ++r.violations;
            if (r.witness.empty()) r.witness = "line " + std::to_string(l) + " has fewer than two points";
        }
    }
    for (std::size_t a = 0; a < points_.size(); ++a)
        for (std::size_t b = a + 1; b < points_.size(); ++b) {
            ++r.checked;
            std::vector<LineId> common;
            std::set_intersection(points_[a].begin(), points_[a].end(), points_[b].begin(), points_[b].end(),
                                  std::back_inserter(common));
            if (common.size() >= 2) {
                ++r.violations;
                if (r.witness.empty())
                    r.witness = "points " + std::to_string(a) + "," + std::to_string(b) + " share lines " + join(common);
            }
        }
    r.passed = r.violations == 0;
    return r;
}

Reconstruction reconstruct(std::span<const DimensionedClique> b, const LineGraph& g) {
    Reconstruction r;
    r.attempted = true;
    r.classes = upsilon_classes(b, g);
    std::vector<Clique> bundles(r.classes.class_count);
    std::vector<bool> done(r.classes.class_count, false);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto c = r.classes.class_of[i];
        if (done[c]) continue;
        done[c] = true;
        bundles[c] = bundle_of(i, b, r.classes);
    }
    r.space = ReconstructedSpace(std::move(bundles), g.size());
    return r;
}

EquivalenceReport verify_equivalence(const SpineSpace& space, std::span<const DimensionedClique> b,
                                     const Reconstruction& recon, std::span<const LineId> perm) {
    EquivalenceReport rep;
    const auto& pts = space.points();
    const auto& lines = space.lines();
    rep.source_points = pts.size();
    rep.reconstructed_points = recon.space.points().size();
    rep.point_to_bundle.assign(pts.size(), -1);
    const auto inv = invert_permutation(perm);
    auto note_in = [](std::string& slot, std::string s) {
        if (slot.empty()) slot = std::move(s);
    };
    auto note = [&](std::string s) { note_in(rep.bijection_witness, std::move(s)); };

    bool well_defined = true;
    for (std::size_t i = 0; i < b.size(); ++i) {
        // Proper points common to every line of the member.
        std::vector<PointId> common;
        for (std::size_t t = 0; t < b[i].lines.size(); ++t) {
            const auto& lp = lines[inv[b[i].lines[t]]].points;
            if (t == 0) {
                common = lp;
                continue;
            }
            std::vector<PointId> next;
            std::set_intersection(common.begin(), common.end(), lp.begin(), lp.end(), std::back_inserter(next));
            common.swap(next);
        }
        if (common.empty() || !recon.classes.transitive()) continue;
        const auto pid = recon.space.find(bundle_of(i, b, recon.classes));
        if (!pid) continue;
        for (PointId u : common) {
            auto& slot = rep.point_to_bundle[u];
            if (slot >= 0 && slot != static_cast<std::int64_t>(*pid)) {
                well_defined = false;
                note("point " + std::to_string(u) + " has semibundles in two different bundles");
            }
            slot = *pid;
        }
    }

    std::vector<bool> hit(rep.reconstructed_points, false);
    bool injective = true, total = true;
    for (std::size_t u = 0; u < pts.size(); ++u) {
        const auto p = rep.point_to_bundle[u];
        if (p < 0) {
            total = false;
            note("point " + std::to_string(u) + " has no semibundle in the bundle family");
            continue;
        }
        if (hit[static_cast<std::size_t>(p)]) {
            injective = false;
            note("bundle " + std::to_string(p) + " is the image of two points");
        }
        hit[static_cast<std::size_t>(p)] = true;
    }
    const bool onto = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    if (!onto) note("some reconstructed point is not the image of a source point");
    rep.bijection = well_defined && injective && total && onto;

    // Source lines through each point, in graph ids.
    std::vector<Clique> through(pts.size());
    for (PointId u = 0; u < pts.size(); ++u) {
        for (LineId l : space.lines_through(u)) through[u].push_back(perm[l]);
        std::sort(through[u].begin(), through[u].end());
    }
    for (PointId u = 0; u < pts.size(); ++u) {
        const auto p = rep.point_to_bundle[u];
        if (p < 0) continue;
        const auto& bundle = recon.space.points()[static_cast<std::size_t>(p)];
        std::vector<LineId> diff;
        std::set_symmetric_difference(through[u].begin(), through[u].end(), bundle.begin(), bundle.end(),
                                      std::back_inserter(diff));
        if (!diff.empty()) {
            rep.incidence_mismatches += diff.size();
            note_in(rep.incidence_witness,
                    "point " + std::to_string(u) + " disagrees on incidence with line " + std::to_string(inv[diff[0]]));
        }
    }
    rep.incidence = rep.bijection && rep.incidence_mismatches == 0;

    for (PointId u = 0; u < pts.size(); ++u)
        for (PointId v = u + 1; v < pts.size(); ++v) {
            const auto pu = rep.point_to_bundle[u], pv = rep.point_to_bundle[v];
            if (pu < 0 || pv < 0) continue;
            const bool source = intersects(through[u], through[v]);
            const std::uint32_t pair[2] = {static_cast<std::uint32_t>(pu), static_cast<std::uint32_t>(pv)};
            if (source != recon.space.collinear(pair)) {
                ++rep.collinearity_mismatches;
                note_in(rep.collinearity_witness,
                        "points " + std::to_string(u) + "," + std::to_string(v) + " disagree on collinearity");
            }
        }
    rep.collinearity = rep.bijection && rep.collinearity_mismatches == 0;
    return rep;
}

UpsilonGeometryReport check_upsilon_geometry(const SpineSpace& space, const CliqueClassifier& classifier,
                                             std::span<const Clique> b_source, const LineGraph& g) {
    UpsilonGeometryReport rep;
    std::vector<const GeometricClique*> geo;
    for (const auto& k : b_source) {
        const auto* c = classifier.classify(k);
        if (c == nullptr || !c->witness.strong || !c->witness.vertex) {
            ++rep.unclassified;
            if (rep.witness.empty()) rep.witness = "member " + join(k) + " is not a semibundle";
        }
        geo.push_back(c);
    }
    for (std::size_t i = 0; i < b_source.size(); ++i)
        for (std::size_t j = i; j < b_source.size(); ++j) {
            const auto* a = geo[i];
            const auto* c = geo[j];
            if (a == nullptr || c == nullptr || !a->witness.strong || !c->witness.strong) continue;
            ++rep.pairs;
            const bool same_type =
                space.strong()[*a->witness.strong].is_star() == space.strong()[*c->witness.strong].is_star();
            const bool expected = same_type && *a->witness.vertex == *c->witness.vertex;
            if (expected != upsilon_empty(b_source[i], b_source[j], g)) {
                ++rep.mismatches;
                if (rep.witness.empty())
                    rep.witness = "members " + join(b_source[i]) + " and " + join(b_source[j]) +
                                  (expected ? " share type and vertex without Υ∅" : " are Υ∅-related across types or vertices");
            }
        }
    return rep;
}

}  // namespace spine
