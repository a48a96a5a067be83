#pragma once

// The ambient Grassmann space of k-subspaces with its k-pencils.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "spine/gfq.hpp"

namespace spine {

// The k-subspaces between h (dim k-1) and b (dim k+1).
struct GrassmannPencil {
    Subspace h;
    Subspace b;
    std::vector<Subspace> points;  // q+1 of them, sorted
};

struct GrassmannStar {
    Subspace h;
};

struct GrassmannTop {
    Subspace b;
};

class GrassmannSpace {
public:
    GrassmannSpace(FieldSpec f, int k, std::vector<Subspace> points, std::vector<GrassmannPencil> pencils);

    const FieldSpec& field() const noexcept { return field_; }
    int k() const noexcept { return k_; }
    const std::vector<Subspace>& points() const noexcept { return points_; }
    const std::vector<GrassmannPencil>& pencils() const noexcept { return pencils_; }
    std::optional<std::uint32_t> point_id(const Subspace& u) const;

private:
    FieldSpec field_;
    int k_;
    std::vector<Subspace> points_;
    std::vector<GrassmannPencil> pencils_;
    std::unordered_map<Subspace, std::uint32_t, SubspaceHash> index_;
};

// Throws ConfigError unless 1 < k < n-1.
GrassmannSpace build_grassmann(const FieldSpec& f, int k);

// Pencil list order in build_grassmann: h ascending, then b ascending.
GrassmannPencil make_pencil(const Subspace& h, const Subspace& b);

GrassmannStar star_of(const GrassmannPencil& p);
GrassmannTop top_of(const GrassmannPencil& p);
std::vector<Subspace> star_points(const GrassmannStar& s, int k);
std::vector<Subspace> top_points(const GrassmannTop& t, int k);

// All d-subspaces containing h, sorted.
std::vector<Subspace> enumerate_above(const Subspace& h, int d);

}  // namespace spine
