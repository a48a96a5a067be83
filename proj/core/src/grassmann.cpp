#include "spine/grassmann.hpp"

#include <string>

#include "spine/errors.hpp"

namespace spine {

GrassmannSpace::GrassmannSpace(FieldSpec f, int k, std::vector<Subspace> points,
                               std::vector<GrassmannPencil> pencils)
    : field_(f), k_(k), points_(std::move(points)), pencils_(std::move(pencils)) {
    index_.reserve(points_.size());
    for (std::uint32_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
}

std::optional<std::uint32_t> GrassmannSpace::point_id(const Subspace& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Subspace> enumerate_above(const Subspace& h, int d) {
    return enumerate_between(h, Subspace::whole(h.field()), d);
}

GrassmannPencil make_pencil(const Subspace& h, const Subspace& b) {
    if (b.dim() != h.dim() + 2) throw InputError("pencil needs dim b = dim h + 2");
    return GrassmannPencil{h, b, enumerate_between(h, b, h.dim() + 1)};
}

GrassmannSpace build_grassmann(const FieldSpec& f, int k) {
    if (!(1 < k && k < f.n - 1))
        throw ConfigError("Grassmann space needs 1 < k < n-1 (k=" + std::to_string(k) +
                          ", n=" + std::to_string(f.n) + ")");
    std::vector<GrassmannPencil> pencils;
    for (const auto& h : enumerate_subspaces(f, k - 1))
        for (const auto& b : enumerate_above(h, k + 1)) pencils.push_back(make_pencil(h, b));
    return GrassmannSpace(f, k, enumerate_subspaces(f, k), std::move(pencils));
}

GrassmannStar star_of(const GrassmannPencil& p) { return GrassmannStar{p.h}; }
GrassmannTop top_of(const GrassmannPencil& p) { return GrassmannTop{p.b}; }

std::vector<Subspace> star_points(const GrassmannStar& s, int k) { return enumerate_above(s.h, k); }

std::vector<Subspace> top_points(const GrassmannTop& t, int k) {
    return enumerate_between(Subspace::zero(t.b.field()), t.b, k);
}

}  // namespace spine
