#pragma once

// Parameter sets outside the bundle gate, and the homology map that breaks
// bundle preservation in the neighbourhood case w = k, m = k-1.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spine/cliques.hpp"

namespace spine {

enum class CaseTag { grassmann, single_point, star, top, neighbourhood, none };
enum class StarStatus { holds, fails, unknown };
std::string_view to_string(CaseTag t) noexcept;
std::string_view to_string(StarStatus s) noexcept;

struct ExcludedCase {
    CaseTag tag = CaseTag::none;
    StarStatus expected = StarStatus::unknown;
};

// Depends on (n, k, m, w) only. For tag none the status is `holds` when the
// bundle gate holds and `unknown` otherwise.
ExcludedCase classify_case(const SpineParams& p);

struct LineMap {
    std::vector<LineId> image;  // image[l] = F(l)
    std::uint32_t star = 0;     // strong subspace id of X
    int lambda = 0;
    Subspace center;            // W
    Subspace axis;              // hyperplane fixed pointwise
};

// Throws ConfigError outside the neighbourhood case, for q = 2, for lambda
// not in 2..q-1, or when `star` is not a star whose closure contains W.
// With no star given, the first such star is used.
LineMap build_homology_map(const SpineSpace& s, int lambda, std::optional<std::uint32_t> star = std::nullopt);

struct CounterexampleReport {
    bool bijection = false;
    std::uint64_t pairs = 0;
    std::uint64_t pi_violations = 0;
    std::uint64_t rho_violations = 0;
    std::uint64_t moved_lines = 0;
    // Lines of X missing W in their closure that F still fixes (they lie in the axis).
    std::uint64_t fixed_axis_lines = 0;
    std::uint64_t moved_rule_mismatches = 0;  // F(L) != L disagrees with the refined rule
    bool witness_found = false;
    std::uint32_t top = 0;
    LineId line = 0;
    PointId u = 0;
    PointId u_prime = 0;
    bool bundle_image_is_bundle = true;
    std::string witness;

    bool passed() const noexcept {
        return bijection && pi_violations == 0 && rho_violations == 0 && witness_found && !bundle_image_is_bundle;
    }
};

CounterexampleReport verify_counterexample(const SpineSpace& s, const LineMap& f, const LineGraph& pi,
                                           const LineGraph& rho);

// Stars pairwise disjoint, tops pairwise disjoint, a star and a top meet in one
// line whose closure passes through W.
CheckReport check_neighbourhood_structure(const SpineSpace& s);

}  // namespace spine
