#include "spine/spine_space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "spine/errors.hpp"
#include "spine/grassmann.hpp"

namespace spine {

std::string_view to_string(LineClass c) noexcept {
    switch (c) {
        case LineClass::affine: return "affine";
        case LineClass::alpha: return "alpha";
        case LineClass::omega: return "omega";
    }
    return "?";
}

std::string_view to_string(StrongKind k) noexcept {
    switch (k) {
        case StrongKind::omega_star: return "omega-star";
        case StrongKind::alpha_star: return "alpha-star";
        case StrongKind::alpha_top: return "alpha-top";
        case StrongKind::omega_top: return "omega-top";
    }
    return "?";
}

std::string_view to_string(PlaneKind k) noexcept {
    switch (k) {
        case PlaneKind::projective: return "projective";
        case PlaneKind::punctured: return "punctured";
        case PlaneKind::affine: return "affine";
    }
    return "?";
}

SpineParams SpineParams::make(int q, int n, int k, int m, int w) {
    return SpineParams{FieldSpec::make(q, n), k, m, w};
}

Subspace SpineParams::horizon_subspace() const {
    const int n = field.n;
    std::vector<std::uint8_t> flat;
    for (int i = n - w; i < n; ++i) {
        std::vector<std::uint8_t> e(static_cast<std::size_t>(n), 0);
        e[i] = 1;
        flat.insert(flat.end(), e.begin(), e.end());
    }
    return Subspace::from_rows(field, std::move(flat), w);
}

GateReport validate_params(const SpineParams& p) {
    GateReport r;
    const int n = p.field.n, k = p.k, m = p.m, w = p.w;
    auto fail = [&r](std::string s) { r.violations.push_back(std::move(s)); };
    bool basic = true;
    if (!(1 < k && k < n - 1)) {
        basic = false;
        fail("basic: 1 < k < n-1 fails (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
    if (w < 0 || w > n) {
        basic = false;
        fail("basic: 0 <= dim W <= n fails (w=" + std::to_string(w) + ")");
    }
    if (m < 0 || m < k - (n - w) || m > std::min(k, w)) {
        basic = false;
        fail("basic: max(0, k-codim W) <= m <= min(k, dim W) fails (m=" + std::to_string(m) + ")");
    }
    r.basic = basic;
    const bool g2a = 3 <= n - k, g2b = 3 <= k - m;
    if (!g2a) fail("pencil gate: 3 <= n-k fails (n-k=" + std::to_string(n - k) + ")");
    if (!g2b) fail("pencil gate: 3 <= k-m fails (k-m=" + std::to_string(k - m) + ")");
    r.pencil_gate = basic && g2a && g2b;
    const bool left = 4 <= n - k && w != m + 1;
    const bool right = 4 <= k - m && k != m + 1;
    if (!left && !right)
        fail("bundle gate: neither (4 <= n-k and dim W != m+1) nor (4 <= k-m and k != m+1) holds (n-k=" +
             std::to_string(n - k) + ", k-m=" + std::to_string(k - m) + ", w=" + std::to_string(w) + ")");
    r.bundle_gate = basic && (left || right);
    return r;
}

std::optional<LineClass> classify_line(const Subspace& h, const Subspace& b, const SpineParams& p) {
    if (h.dim() != p.k - 1 || b.dim() != p.k + 1) throw InputError("classify_line: need dim h = k-1 and dim b = k+1");
    if (!contains(b, h)) throw InputError("classify_line: h is not inside b");
    const Subspace W = p.horizon_subspace();
    const int hw = intersect(h, W).dim();
    const int bw = intersect(b, W).dim();
    const int m = p.m;
    if (hw == m && bw == m + 1) return LineClass::affine;
    if (hw == m && bw == m) return LineClass::alpha;
    if (hw == m - 1 && bw == m + 1) return LineClass::omega;
    return std::nullopt;
}

SpineSpace::SpineSpace(SpineParams p, std::vector<Subspace> points, std::vector<SpineLine> lines)
    : params_(p), w_(p.horizon_subspace()), points_(std::move(points)), lines_(std::move(lines)) {
    point_index_.reserve(points_.size());
    for (PointId i = 0; i < points_.size(); ++i) point_index_.emplace(points_[i], i);
    through_.resize(points_.size());
    for (const auto& l : lines_) {
        by_lower_[l.h].push_back(l.id);
        by_upper_[l.b].push_back(l.id);
        for (PointId u : l.points) through_[u].push_back(l.id);
    }
    build_strong();
}

std::optional<PointId> SpineSpace::point_id(const Subspace& u) const {
    auto it = point_index_.find(u);
    if (it == point_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<LineId> SpineSpace::line_id(const Subspace& h, const Subspace& b) const {
    for (LineId l : lines_with_lower(h))
        if (lines_[l].b == b) return l;
    return std::nullopt;
}

std::span<const LineId> SpineSpace::lines_with_lower(const Subspace& h) const {
    auto it = by_lower_.find(h);
    if (it == by_lower_.end()) return {};
    return it->second;
}

std::span<const LineId> SpineSpace::lines_with_upper(const Subspace& b) const {
    auto it = by_upper_.find(b);
    if (it == by_upper_.end()) return {};
    return it->second;
}

std::span<const LineId> SpineSpace::lines_through(PointId u) const { return through_.at(u); }

std::optional<Subspace> SpineSpace::meeting_point(LineId a, LineId b) const {
    if (a == b) return std::nullopt;
    const auto& la = lines_[a];
    const auto& lb = lines_[b];
    const int k = params_.k;
    if (la.h == lb.h) {
        Subspace x = intersect(la.b, lb.b);
        if (x.dim() == k) return x;
    } else if (la.b == lb.b) {
        Subspace x = sum(la.h, lb.h);
        if (x.dim() == k) return x;
    }
    return std::nullopt;
}

Plane SpineSpace::make_plane(bool star_type, Subspace lower, Subspace upper) const {
    Plane pl;
    pl.star_type = star_type;
    const int k = params_.k;
    if (star_type) {
        for (LineId l : lines_with_lower(lower))
            if (contains(upper, lines_[l].b)) pl.lines.push_back(l);
    } else {
        for (LineId l : lines_with_upper(upper))
            if (contains(lines_[l].h, lower)) pl.lines.push_back(l);
    }
    std::sort(pl.lines.begin(), pl.lines.end());
    for (auto& u : enumerate_between(lower, upper, k))
        if (!is_proper(u)) pl.improper.push_back(std::move(u));
    const auto q = static_cast<std::size_t>(params_.field.q);
    if (pl.improper.empty())
        pl.kind = PlaneKind::projective;
    else if (pl.improper.size() == 1)
        pl.kind = PlaneKind::punctured;
    else if (pl.improper.size() == q + 1)
        pl.kind = PlaneKind::affine;
    else
        throw std::logic_error("plane with a non-linear horizon section");
    pl.lower = std::move(lower);
    pl.upper = std::move(upper);
    return pl;
}

std::optional<Plane> SpineSpace::plane_of(LineId a, LineId b) const {
    if (!meeting_point(a, b)) return std::nullopt;
    const auto& la = lines_[a];
    const auto& lb = lines_[b];
    if (la.h == lb.h) return make_plane(true, la.h, sum(la.b, lb.b));
    return make_plane(false, intersect(la.h, lb.h), la.b);
}

std::vector<Plane> SpineSpace::planes() const {
    const int k = params_.k;
    std::map<std::pair<Subspace, Subspace>, int> star_planes, top_planes;
    for (const auto& l : lines_) {
        for (auto& y : enumerate_above(l.b, k + 2)) ++star_planes[{l.h, std::move(y)}];
        for (auto& z : enumerate_between(Subspace::zero(l.h.field()), l.h, k - 2)) ++top_planes[{std::move(z), l.b}];
    }
    std::vector<Plane> out;
    for (const auto& [key, count] : star_planes)
        if (count >= 2) out.push_back(make_plane(true, key.first, key.second));
    for (const auto& [key, count] : top_planes)
        if (count >= 2) out.push_back(make_plane(false, key.first, key.second));
    return out;
}

void SpineSpace::build_strong() {
    const int n = params_.field.n, k = params_.k, m = params_.m, w = params_.w;
    struct Candidate {
        StrongKind kind;
        Subspace gen;
        std::vector<LineId> lines;
        std::vector<PointId> points;
    };
    std::vector<Candidate> cands;
    auto collect = [&](const std::unordered_map<Subspace, std::vector<LineId>, SubspaceHash>& groups, bool star) {
        std::vector<const Subspace*> keys;
        for (const auto& [g, _] : groups) keys.push_back(&g);
        std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) { return *a < *b; });
        for (const auto* g : keys) {
            Candidate c;
            const int gw = intersect(*g, w_).dim();
            if (star)
                c.kind = gw == m ? StrongKind::alpha_star : StrongKind::omega_star;
            else
                c.kind = gw == m ? StrongKind::alpha_top : StrongKind::omega_top;
            c.gen = *g;
            c.lines = groups.at(*g);
            std::sort(c.lines.begin(), c.lines.end());
            std::set<PointId> pts;
            for (LineId l : c.lines) pts.insert(lines_[l].points.begin(), lines_[l].points.end());
            c.points.assign(pts.begin(), pts.end());
            cands.push_back(std::move(c));
        }
    };
    collect(by_lower_, true);
    const std::size_t n_star = cands.size();
    collect(by_upper_, false);

    std::unordered_map<Subspace, std::size_t, SubspaceHash> star_idx, top_idx;
    for (std::size_t i = 0; i < cands.size(); ++i) (i < n_star ? star_idx : top_idx).emplace(cands[i].gen, i);

    // A group sits inside a larger strong subspace only if that one is the
    // other-type group of one of its lines.
    auto strictly_inside = [](const std::vector<PointId>& a, const std::vector<PointId>& b) {
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::vector<std::optional<std::uint32_t>> cand_to_strong(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const bool star = i < n_star;
        bool maximal = true;
        for (LineId l : cands[i].lines) {
            const auto& other = star ? cands[top_idx.at(lines_[l].b)] : cands[star_idx.at(lines_[l].h)];
            if (strictly_inside(cands[i].points, other.points)) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        StrongSubspace s;
        s.id = static_cast<std::uint32_t>(strong_.size());
        s.kind = cands[i].kind;
        s.generator = cands[i].gen;
        s.points = cands[i].points;
        s.lines = cands[i].lines;
        switch (s.kind) {
            case StrongKind::omega_star: s.p_dim = w - m; s.d_dim = -1; break;
            case StrongKind::alpha_star: s.p_dim = n - k; s.d_dim = w - m - 1; break;
            case StrongKind::alpha_top: s.p_dim = k - m; s.d_dim = -1; break;
            case StrongKind::omega_top: s.p_dim = k; s.d_dim = k - m - 1; break;
        }
        cand_to_strong[i] = s.id;
        strong_.push_back(std::move(s));
    }
    line_star_.assign(lines_.size(), std::nullopt);
    line_top_.assign(lines_.size(), std::nullopt);
    for (const auto& l : lines_) {
        line_star_[l.id] = cand_to_strong[star_idx.at(l.h)];
        line_top_[l.id] = cand_to_strong[top_idx.at(l.b)];
    }
}

SpineSpace build_spine(const SpineParams& p) {
    const GateReport g = validate_params(p);
    if (!g.basic) throw ConfigError(g.violations.empty() ? "invalid spine parameters" : g.violations.front());
    const int k = p.k;
    const Subspace W = p.horizon_subspace();
    std::vector<Subspace> points;
    for (auto& u : enumerate_subspaces(p.field, k))
        if (intersect(u, W).dim() == p.m) points.push_back(std::move(u));
    std::unordered_map<Subspace, PointId, SubspaceHash> idx;
    for (PointId i = 0; i < points.size(); ++i) idx.emplace(points[i], i);

    std::vector<SpineLine> lines;
    for (const auto& h : enumerate_subspaces(p.field, k - 1)) {
        for (const auto& b : enumerate_above(h, k + 1)) {
            auto closure = enumerate_between(h, b, k);
            std::vector<PointId> proper;
            std::vector<Subspace> improper;
            for (const auto& u : closure) {
                auto it = idx.find(u);
                if (it != idx.end())
                    proper.push_back(it->second);
                else
                    improper.push_back(u);
            }
            if (proper.size() < 2) continue;
            auto cls = classify_line(h, b, p);
            if (!cls) throw std::logic_error("pencil with two proper points outside the line classes");
            if ((*cls == LineClass::affine) != (improper.size() == 1))
                throw std::logic_error("affine class disagrees with improper point count");
            SpineLine l;
            l.id = static_cast<LineId>(lines.size());
            l.h = h;
            l.b = b;
            std::sort(proper.begin(), proper.end());
            l.points = std::move(proper);
            l.closure = std::move(closure);
            l.cls = *cls;
            if (*cls == LineClass::affine) l.improper = sum(h, intersect(b, W));
            lines.push_back(std::move(l));
        }
    }
    return SpineSpace(p, std::move(points), std::move(lines));
}

const std::vector<StrongSubspace>& enumerate_strong(const SpineSpace& s) { return s.strong(); }

CheckReport check_fact_intersections(const SpineSpace& s) {
    CheckReport r;
    r.name = "star-top-intersections";
    const auto& st = s.strong();
    std::vector<std::vector<std::uint32_t>> containing(s.points().size());
    for (const auto& x : st)
        for (PointId u : x.points) containing[u].push_back(x.id);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<PointId>> shared;
    for (PointId u = 0; u < containing.size(); ++u) {
        const auto& c = containing[u];
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) shared[{c[i], c[j]}].push_back(u);
    }
    r.checked = st.size() * (st.size() - (st.empty() ? 0 : 1)) / 2;
    auto note = [&r](std::string w) {
        ++r.violations;
        r.passed = false;
        if (r.witness.empty()) r.witness = std::move(w);
    };
    for (const auto& [key, pts] : shared) {
        if (pts.size() <= 1) continue;
        const auto& a = st[key.first];
        const auto& b = st[key.second];
        const std::string tag = std::string(to_string(a.kind)) + "#" + std::to_string(a.id) + " vs " +
                                std::string(to_string(b.kind)) + "#" + std::to_string(b.id);
        if (a.is_star() == b.is_star()) {
            note(tag + " share " + std::to_string(pts.size()) + " points");
            continue;
        }
        if (a.projective() && b.projective()) {
            note(tag + " (both projective) share " + std::to_string(pts.size()) + " points");
            continue;
        }
        const auto& star = a.is_star() ? a : b;
        const auto& top = a.is_star() ? b : a;
        auto l = s.line_id(star.generator, top.generator);
        if (!l || s.lines()[*l].points != pts) note(tag + " share points that are not a line");
    }
    return r;
}

CheckReport check_tripod_span(const SpineSpace& s) {
    CheckReport r;
    r.name = "tripod-span";
    const auto& lines = s.lines();
    auto run_group = [&](std::span<const LineId> group, bool star) {
        std::map<Subspace, std::vector<LineId>> by_point;
        for (LineId l : group)
            for (const auto& u : lines[l].closure) by_point[u].push_back(l);
        for (const auto& [u, ls] : by_point) {
            for (std::size_t i = 0; i < ls.size(); ++i)
                for (std::size_t j = i + 1; j < ls.size(); ++j) {
                    const auto& a = lines[ls[i]];
                    const auto& b = lines[ls[j]];
                    const Subspace span_ab = star ? sum(a.b, b.b) : intersect(a.h, b.h);
                    for (std::size_t t = j + 1; t < ls.size(); ++t) {
                        const auto& c = lines[ls[t]];
                        const bool coplanar = star ? contains(span_ab, c.b) : contains(c.h, span_ab);
                        if (coplanar) continue;
                        ++r.checked;
                        auto sa = star ? s.star_of_line(a.id) : s.top_of_line(a.id);
                        auto sb = star ? s.star_of_line(b.id) : s.top_of_line(b.id);
                        auto sc = star ? s.star_of_line(c.id) : s.top_of_line(c.id);
                        if (!(sa && sa == sb && sb == sc)) {
                            ++r.violations;
                            r.passed = false;
                            if (r.witness.empty())
                                r.witness = "lines " + std::to_string(a.id) + "," + std::to_string(b.id) + "," +
                                            std::to_string(c.id) + " lie in no maximal strong subspace";
                        }
                    }
                }
        }
    };
    std::set<Subspace> seen_h, seen_b;
    for (const auto& l : lines) {
        if (seen_h.insert(l.h).second) run_group(s.lines_with_lower(l.h), true);
        if (seen_b.insert(l.b).second) run_group(s.lines_with_upper(l.b), false);
    }
    return r;
}

}  // namespace spine
