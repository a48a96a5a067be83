#include "spine/excluded.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "spine/errors.hpp"

namespace spine {
namespace {

using Row = std::vector<std::uint8_t>;

Row to_row(std::span<const std::uint8_t> r) { return Row(r.begin(), r.end()); }

Subspace span_of(const FieldSpec& f, const std::vector<Row>& rows) {
    std::vector<std::vector<int>> v;
    for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
    return rref(f, v);
}

}  // namespace

std::string_view to_string(CaseTag t) noexcept {
    switch (t) {
        case CaseTag::grassmann: return "grassmann";
        case CaseTag::single_point: return "single-point";
        case CaseTag::star: return "star";
        case CaseTag::top: return "top";
        case CaseTag::neighbourhood: return "neighbourhood";
        case CaseTag::none: return "none";
    }
    return "?";
}

std::string_view to_string(StarStatus s) noexcept {
    switch (s) {
        case StarStatus::holds: return "holds";
        case StarStatus::fails: return "fails";
        case StarStatus::unknown: return "unknown";
    }
    return "?";
}

ExcludedCase classify_case(const SpineParams& p) {
    const int n = p.field.n, k = p.k, m = p.m, w = p.w;
    if (w == n) return {CaseTag::grassmann, StarStatus::holds};
    if (w == k && m == k) return {CaseTag::single_point, StarStatus::holds};
    if (w == k - 1 && m == k - 1) return {CaseTag::star, StarStatus::holds};
    if (w == k + 1 && m == k) return {CaseTag::top, StarStatus::holds};
    if (w == k && m == k - 1) return {CaseTag::neighbourhood, StarStatus::fails};
    const auto gate = validate_params(p);
    return {CaseTag::none, gate.basic && gate.bundle_gate ? StarStatus::holds : StarStatus::unknown};
}

LineMap build_homology_map(const SpineSpace& s, int lambda, std::optional<std::uint32_t> star) {
    const auto& p = s.params();
    const FieldSpec& f = p.field;
    if (classify_case(p).tag != CaseTag::neighbourhood)
        throw ConfigError("homology map needs the neighbourhood case w = k, m = k-1");
    if (f.q == 2) throw ConfigError("q = 2 admits no homology other than the identity");
    if (lambda < 2 || lambda >= f.q) throw ConfigError("homology scalar must lie in 2..q-1");
    const Subspace& w = s.horizon_subspace();

    const StrongSubspace* x = nullptr;
    for (const auto& cand : s.strong()) {
        const bool ok = cand.is_star() && contains(w, cand.generator);
        if (star ? cand.id == *star : ok) {
            if (!ok) throw ConfigError("chosen strong subspace is not a star through W");
            x = &cand;
            break;
        }
    }
    if (x == nullptr) throw ConfigError("no star through W");
    const Subspace& h = x->generator;

    // Basis: rows of H, a vector w0 of W outside H, then standard vectors.
    std::vector<Row> basis;
    for (int i = 0; i < h.dim(); ++i) basis.push_back(to_row(h.row(i)));
    for (int i = 0; i < w.dim(); ++i)
        if (!contains_vector(h, w.row(i))) {
            basis.push_back(to_row(w.row(i)));
            break;
        }
    const std::size_t w0 = basis.size() - 1;
    for (int i = 0; i < f.n && static_cast<int>(basis.size()) < f.n; ++i) {
        Row e(static_cast<std::size_t>(f.n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (!contains_vector(span_of(f, basis), e)) basis.push_back(e);
    }
    std::vector<Row> images = basis;
    for (auto& v : images[w0]) v = static_cast<std::uint8_t>(v * lambda % f.q);
    const auto g = LinearMap::from_basis_images(f, basis, images);

    std::vector<Row> axis_rows(basis.begin(), basis.end());
    axis_rows.erase(axis_rows.begin() + static_cast<std::ptrdiff_t>(w0));

    LineMap out;
    out.star = x->id;
    out.lambda = lambda;
    out.center = w;
    out.axis = span_of(f, axis_rows);
    out.image.resize(s.lines().size());
    for (const auto& l : s.lines()) {
        out.image[l.id] = l.id;
        if (!(l.h == h)) continue;
        const auto moved = s.line_id(h, g.apply(l.b));
        if (!moved) throw ContractError("homology image of a line is not a line");
        out.image[l.id] = *moved;
    }
    return out;
}

CounterexampleReport verify_counterexample(const SpineSpace& s, const LineMap& f, const LineGraph& pi,
                                           const LineGraph& rho) {
    CounterexampleReport rep;
    const auto& lines = s.lines();
    const std::size_t n = lines.size();
    auto note = [&rep](std::string t) {
        if (rep.witness.empty()) rep.witness = std::move(t);
    };

    std::vector<LineId> sorted = f.image;
    std::sort(sorted.begin(), sorted.end());
    rep.bijection = sorted.size() == n && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                    (n == 0 || sorted.back() == n - 1);
    if (!rep.bijection) {
        note("F is not a permutation of the lines");
        return rep;
    }

    for (LineId a = 0; a < n; ++a)
        for (LineId b = a + 1; b < n; ++b) {
            ++rep.pairs;
            if (pi.adjacent(a, b) != pi.adjacent(f.image[a], f.image[b])) ++rep.pi_violations;
            if (rho.adjacent(a, b) != rho.adjacent(f.image[a], f.image[b])) ++rep.rho_violations;
        }

    const auto& x = s.strong()[f.star];
    for (const auto& l : lines) {
        const bool moved = f.image[l.id] != l.id;
        rep.moved_lines += moved ? 1 : 0;
        const bool in_x = l.h == x.generator;
        const bool misses_w = !contains(l.b, f.center);
        const bool in_axis = contains(f.axis, l.b);
        if (in_x && misses_w && !moved && in_axis) ++rep.fixed_axis_lines;
        if (moved != (in_x && misses_w && !in_axis)) {
            ++rep.moved_rule_mismatches;
            note("line " + std::to_string(l.id) + " breaks the moved-line rule");
        }
    }

    auto image_of = [&](std::span<const LineId> ls) {
        Clique out;
        for (LineId l : ls) out.push_back(f.image[l]);
        std::sort(out.begin(), out.end());
        return out;
    };
    auto semibundle = [&](const StrongSubspace& y, PointId u) {
        Clique out;
        for (LineId l : y.lines)
            if (std::binary_search(lines[l].points.begin(), lines[l].points.end(), u)) out.push_back(l);
        return out;
    };
    std::map<Clique, PointId> bundles;
    for (PointId v = 0; v < s.points().size(); ++v) {
        auto t = s.lines_through(v);
        bundles.emplace(Clique(t.begin(), t.end()), v);
    }

    for (const auto& y : s.strong()) {
        if (y.is_star() || rep.witness_found) continue;
        std::vector<LineId> common;
        std::set_intersection(x.lines.begin(), x.lines.end(), y.lines.begin(), y.lines.end(),
                              std::back_inserter(common));
        if (common.size() != 1) continue;
        const LineId l = common[0];
        for (PointId u : lines[l].points) {
            const auto ly = semibundle(y, u);
            if (image_of(ly) != ly) continue;
            const auto img_x = image_of(semibundle(x, u));
            for (PointId v : lines[l].points) {
                if (v == u || img_x != semibundle(x, v)) continue;
                rep.witness_found = true;
                rep.top = y.id;
                rep.line = l;
                rep.u = u;
                rep.u_prime = v;
                break;
            }
            if (rep.witness_found) break;
        }
    }
    if (!rep.witness_found) {
        note("no top Y, line L and point U with split semibundle images");
        return rep;
    }
    auto through = s.lines_through(rep.u);
    rep.bundle_image_is_bundle = bundles.contains(image_of(through));
    if (rep.bundle_image_is_bundle) note("the image of the bundle at U is again a bundle");
    return rep;
}

CheckReport check_neighbourhood_structure(const SpineSpace& s) {
    CheckReport r{"neighbourhood-strong-subspaces", true, 0, 0, {}};
    const auto& st = s.strong();
    for (std::size_t i = 0; i < st.size(); ++i)
        for (std::size_t j = i + 1; j < st.size(); ++j) {
            ++r.checked;
            std::vector<PointId> pts;
            std::set_intersection(st[i].points.begin(), st[i].points.end(), st[j].points.begin(),
                                  st[j].points.end(), std::back_inserter(pts));
            std::vector<LineId> ls;
            std::set_intersection(st[i].lines.begin(), st[i].lines.end(), st[j].lines.begin(), st[j].lines.end(),
                                  std::back_inserter(ls));
            bool ok;
            if (st[i].is_star() == st[j].is_star()) {
                ok = pts.empty();
            } else {
                ok = ls.size() == 1 && s.lines()[ls[0]].points == pts &&
                     contains(s.lines()[ls[0]].b, s.horizon_subspace()) &&
                     contains(s.horizon_subspace(), s.lines()[ls[0]].h);
            }
            if (!ok) {
                ++r.violations;
                if (r.witness.empty())
                    r.witness = std::string(to_string(st[i].kind)) + " " + std::to_string(i) + " and " +
                                std::string(to_string(st[j].kind)) + " " + std::to_string(j);
            }
        }
    r.passed = r.violations == 0;
    return r;
}

}  // namespace spine
