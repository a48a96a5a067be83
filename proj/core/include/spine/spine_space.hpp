#pragma once

// The spine space: k-subspaces U with dim(U ∩ W) = m, lines, planes and the
// maximal strong subspaces (stars and tops).
//
// W is the span of the last w standard basis vectors. Points removed from the
// ambient Grassmann space (the horizon) appear only as closure data on lines
// and planes; they never get point ids.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spine/gfq.hpp"

namespace spine {

using PointId = std::uint32_t;
using LineId = std::uint32_t;

enum class LineClass { affine, alpha, omega };
enum class StrongKind { omega_star, alpha_star, alpha_top, omega_top };
enum class PlaneKind { projective, punctured, affine };

std::string_view to_string(LineClass c) noexcept;
std::string_view to_string(StrongKind k) noexcept;
std::string_view to_string(PlaneKind k) noexcept;

struct SpineParams {
    FieldSpec field;
    int k = 0;
    int m = 0;
    int w = 0;

    // Validates the field only; parameter gates are reported by validate_params.
    static SpineParams make(int q, int n, int k, int m, int w);

    Subspace horizon_subspace() const;  // W
    friend bool operator==(const SpineParams&, const SpineParams&) = default;
};

struct GateReport {
    bool basic = false;        // 1<k<n-1, 0<=w<=n, k-(n-w) <= m <= min(k,w), m >= 0
    bool pencil_gate = false;  // 3 <= n-k and 3 <= k-m
    bool bundle_gate = false;  // (4 <= n-k and w != m+1) or (4 <= k-m and k != m+1)
    std::vector<std::string> violations;
};

GateReport validate_params(const SpineParams& p);

struct SpineLine {
    LineId id = 0;
    Subspace h;                      // dim k-1
    Subspace b;                      // dim k+1
    std::vector<PointId> points;     // proper points, sorted
    std::vector<Subspace> closure;   // all q+1 ambient points, sorted
    LineClass cls = LineClass::alpha;
    std::optional<Subspace> improper;  // direction of an affine line

    bool is_affine() const noexcept { return cls == LineClass::affine; }
};

struct StrongSubspace {
    std::uint32_t id = 0;
    StrongKind kind = StrongKind::alpha_star;
    Subspace generator;            // H for stars, B for tops
    std::vector<PointId> points;   // sorted
    std::vector<LineId> lines;     // sorted
    int p_dim = 0;
    int d_dim = -1;

    bool is_star() const noexcept { return kind == StrongKind::omega_star || kind == StrongKind::alpha_star; }
    bool projective() const noexcept { return d_dim == -1; }
};

struct Plane {
    bool star_type = true;  // [lower, upper] with dim lower = k-1 (star) or k-2 (top)
    Subspace lower;
    Subspace upper;
    std::vector<LineId> lines;       // sorted
    std::vector<Subspace> improper;  // improper closure points, sorted
    PlaneKind kind = PlaneKind::projective;

    friend bool operator==(const Plane& a, const Plane& b) {
        return a.star_type == b.star_type && a.lower == b.lower && a.upper == b.upper;
    }
};

class SpineSpace {
public:
    SpineSpace(SpineParams p, std::vector<Subspace> points, std::vector<SpineLine> lines);

    const SpineParams& params() const noexcept { return params_; }
    const Subspace& horizon_subspace() const noexcept { return w_; }
    const std::vector<Subspace>& points() const noexcept { return points_; }
    const std::vector<SpineLine>& lines() const noexcept { return lines_; }
    const std::vector<StrongSubspace>& strong() const noexcept { return strong_; }
    bool degenerate() const noexcept { return points_.empty(); }

    std::optional<PointId> point_id(const Subspace& u) const;
    bool is_proper(const Subspace& u) const { return point_id(u).has_value(); }
    std::optional<LineId> line_id(const Subspace& h, const Subspace& b) const;

    std::span<const LineId> lines_with_lower(const Subspace& h) const;
    std::span<const LineId> lines_with_upper(const Subspace& b) const;
    std::span<const LineId> lines_through(PointId u) const;

    // Strong subspace ids of the maximal star / top containing the line, if any.
    std::optional<std::uint32_t> star_of_line(LineId l) const { return line_star_[l]; }
    std::optional<std::uint32_t> top_of_line(LineId l) const { return line_top_[l]; }

    // Closure meeting point of two distinct lines lying on a common plane.
    std::optional<Subspace> meeting_point(LineId a, LineId b) const;
    std::optional<Plane> plane_of(LineId a, LineId b) const;

    // All planes of the space, computed on demand.
    std::vector<Plane> planes() const;

private:
    Plane make_plane(bool star_type, Subspace lower, Subspace upper) const;
    void build_strong();

    SpineParams params_;
    Subspace w_;
    std::vector<Subspace> points_;
    std::vector<SpineLine> lines_;
    std::vector<StrongSubspace> strong_;
    std::unordered_map<Subspace, PointId, SubspaceHash> point_index_;
    std::unordered_map<Subspace, std::vector<LineId>, SubspaceHash> by_lower_;
    std::unordered_map<Subspace, std::vector<LineId>, SubspaceHash> by_upper_;
    std::vector<std::vector<LineId>> through_;
    std::vector<std::optional<std::uint32_t>> line_star_;
    std::vector<std::optional<std::uint32_t>> line_top_;
};

// Throws ConfigError when the basic gate fails. An empty point set is not an
// error; the result reports degenerate().
SpineSpace build_spine(const SpineParams& p);

// Table of line classes by (dim(H∩W), dim(B∩W)); nullopt for pencils that
// are not lines of the spine space. Throws InputError on wrong dimensions.
std::optional<LineClass> classify_line(const Subspace& h, const Subspace& b, const SpineParams& p);

// Maximal strong subspaces with their slit-space dimensions.
const std::vector<StrongSubspace>& enumerate_strong(const SpineSpace& s);

struct CheckReport {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::string witness;
};

// Star/top intersection dichotomies over all pairs of maximal strong subspaces.
CheckReport check_fact_intersections(const SpineSpace& s);
// Every non-coplanar triple of pairwise coplanar lines through a common
// (proper or improper) point lies in one maximal star or top.
CheckReport check_tripod_span(const SpineSpace& s);

}  // namespace spine
