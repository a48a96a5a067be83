#include "spine/geometry_families.hpp"

#include <algorithm>
#include <set>

namespace spine {

std::string_view to_string(CliqueKind k) noexcept {
    switch (k) {
        case CliqueKind::projective_flat: return "projective-flat";
        case CliqueKind::punctured_semiflat: return "punctured-semiflat";
        case CliqueKind::affine_semiflat: return "affine-semiflat";
        case CliqueKind::flat: return "flat";
        case CliqueKind::semibundle_proper: return "semibundle-proper";
        case CliqueKind::semibundle_improper: return "semibundle-improper";
        case CliqueKind::unclassified: return "unclassified";
    }
    return "?";
}

bool is_semiaffine_semiflat(CliqueKind k) noexcept {
    return k == CliqueKind::punctured_semiflat || k == CliqueKind::affine_semiflat;
}

GeometryCatalog::GeometryCatalog(const SpineSpace& s) : space_(&s), planes_(s.planes()) {
    const int k = s.params().k;
    const auto& lines = s.lines();
    for (std::size_t pi = 0; pi < planes_.size(); ++pi) {
        const auto& pl = planes_[pi];
        for (const auto& u : enumerate_between(pl.lower, pl.upper, k)) {
            Clique through;
            for (LineId l : pl.lines) {
                const auto& cl = lines[l].closure;
                if (std::binary_search(cl.begin(), cl.end(), u)) through.push_back(l);
            }
            if (through.size() < 2) continue;
            pencils_.push_back(GeometricPencil{std::move(through), u, s.is_proper(u), pi});
        }
    }
}

std::vector<GeometricClique> GeometryCatalog::flats() const {
    std::vector<GeometricClique> out;
    for (std::size_t i = 0; i < planes_.size(); ++i) {
        GeometricClique c;
        c.lines = planes_[i].lines;
        c.kind = planes_[i].kind == PlaneKind::projective ? CliqueKind::projective_flat : CliqueKind::flat;
        c.witness.plane = i;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<GeometricClique> GeometryCatalog::semiflats() const {
    std::vector<GeometricClique> out;
    const auto& lines = space_->lines();
    for (std::size_t i = 0; i < planes_.size(); ++i) {
        const auto& pl = planes_[i];
        Clique projective;
        std::map<Subspace, Clique> classes;  // parallel classes keyed by direction
        for (LineId l : pl.lines) {
            if (lines[l].is_affine())
                classes[*lines[l].improper].push_back(l);
            else
                projective.push_back(l);
        }
        const CliqueKind kind = pl.kind == PlaneKind::projective  ? CliqueKind::projective_flat
                                : pl.kind == PlaneKind::punctured ? CliqueKind::punctured_semiflat
                                                                  : CliqueKind::affine_semiflat;
        std::vector<const Clique*> cls;
        for (const auto& [_, c] : classes) cls.push_back(&c);
        std::vector<std::size_t> pick(cls.size(), 0);
        for (;;) {
            GeometricClique g;
            g.lines = projective;
            for (std::size_t j = 0; j < cls.size(); ++j) g.lines.push_back((*cls[j])[pick[j]]);
            std::sort(g.lines.begin(), g.lines.end());
            g.kind = kind;
            g.witness.plane = i;
            out.push_back(std::move(g));
            std::size_t j = 0;
            while (j < cls.size() && ++pick[j] == cls[j]->size()) pick[j++] = 0;
            if (j == cls.size()) break;
        }
    }
    return out;
}

Clique GeometryCatalog::semibundle(std::uint32_t x, const Subspace& vertex) const {
    Clique out;
    for (LineId l : space_->strong()[x].lines) {
        const auto& cl = space_->lines()[l].closure;
        if (std::binary_search(cl.begin(), cl.end(), vertex)) out.push_back(l);
    }
    return out;
}

std::vector<GeometricClique> GeometryCatalog::semibundles(bool proper_only) const {
    std::vector<GeometricClique> out;
    for (const auto& x : space_->strong()) {
        std::map<Subspace, Clique> by_vertex;
        for (LineId l : x.lines)
            for (const auto& u : space_->lines()[l].closure) by_vertex[u].push_back(l);
        for (auto& [u, ls] : by_vertex) {
            const bool proper = space_->is_proper(u);
            if (proper_only && !proper) continue;
            GeometricClique g;
            g.lines = std::move(ls);
            g.kind = proper ? CliqueKind::semibundle_proper : CliqueKind::semibundle_improper;
            g.witness.vertex = u;
            g.witness.strong = x.id;
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Clique> pencil_family(const GeometryCatalog& cat, bool proper) {
    std::set<Clique> out;
    for (const auto& p : cat.pencils())
        if (p.proper == proper) out.insert(p.lines);
    return {out.begin(), out.end()};
}

namespace {

std::vector<GeometricClique> candidate_family(const GeometryCatalog& cat, Delta d) {
    auto out = d == Delta::pi ? cat.flats() : cat.semiflats();
    auto sb = cat.semibundles(d == Delta::rho);
    out.insert(out.end(), std::make_move_iterator(sb.begin()), std::make_move_iterator(sb.end()));
    // Drop later duplicates of the same line set.
    std::set<Clique> seen;
    std::vector<GeometricClique> uniq;
    for (auto& g : out)
        if (seen.insert(g.lines).second) uniq.push_back(std::move(g));
    return uniq;
}

}  // namespace

std::vector<GeometricClique> maximal_geometric_cliques(const GeometryCatalog& cat, Delta d) {
    auto fam = candidate_family(cat, d);
    std::vector<Clique> sets;
    sets.reserve(fam.size());
    for (const auto& g : fam) sets.push_back(g.lines);
    CliqueIndex idx(sets, cat.space().lines().size());
    std::vector<GeometricClique> out;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto& c = fam[i].lines;
        if (c.empty()) continue;
        bool inside = false;
        for (std::uint32_t j : idx.containing_all(c))
            if (j != i && sets[j].size() > c.size()) {
                inside = true;
                break;
            }
        if (!inside) out.push_back(fam[i]);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lines < b.lines; });
    return out;
}

CliqueClassifier::CliqueClassifier(const GeometryCatalog& cat, Delta d) : family_(candidate_family(cat, d)) {
    for (std::size_t i = 0; i < family_.size(); ++i) index_.emplace(family_[i].lines, i);
}

const GeometricClique* CliqueClassifier::classify(const Clique& k) const {
    auto it = index_.find(k);
    return it == index_.end() ? nullptr : &family_[it->second];
}

}  // namespace spine
