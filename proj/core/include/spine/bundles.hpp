#pragma once

// Bundles: gluing same-vertex members of ℬ with Υ and Υ∅, the reconstructed
// point set, and the comparison against the source space.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spine/geometry_families.hpp"
#include "spine/pencils.hpp"

namespace spine {

// Υ(k1, k2): two distinct lines of k1 are each related to some line of k2.
// A line counts as related to itself.
bool upsilon(std::span<const LineId> k1, std::span<const LineId> k2, const LineGraph& g);
// Υ both ways, and the cliques are disjoint or equal.
bool upsilon_empty(std::span<const LineId> k1, std::span<const LineId> k2, const LineGraph& g);

struct UpsilonClasses {
    std::vector<std::uint32_t> class_of;  // per member of ℬ, classes numbered by first member
    std::size_t class_count = 0;
    std::uint64_t related_pairs = 0;      // unordered pairs i<j with Υ∅
    std::uint64_t chained_triples = 0;    // ordered triples checked for transitivity
    std::uint64_t transitivity_failures = 0;
    std::string witness;

    bool transitive() const noexcept { return transitivity_failures == 0; }
};

// Components of Υ∅ on ℬ, with transitivity checked over every chain a~b~c.
UpsilonClasses upsilon_classes(std::span<const DimensionedClique> b, const LineGraph& g);

// ⟦K, Υ∅⟧ for member i: union of its class.
Clique bundle_of(std::size_t i, std::span<const DimensionedClique> b, const UpsilonClasses& classes);

class ReconstructedSpace {
public:
    ReconstructedSpace() = default;
    ReconstructedSpace(std::vector<Clique> bundles, std::size_t line_count);

    // Distinct bundles in sorted order; a point is its bundle.
    const std::vector<Clique>& points() const noexcept { return points_; }
    std::size_t line_count() const noexcept { return points_on_.size(); }
    std::span<const std::uint32_t> points_on(LineId l) const noexcept { return points_on_[l]; }
    bool incident(std::uint32_t point, LineId l) const;
    // Some line lies in every listed bundle.
    bool collinear(std::span<const std::uint32_t> pts) const;
    std::optional<std::uint32_t> find(const Clique& bundle) const;

    // Lines on fewer than two points, and point pairs sharing two or more lines.
    CheckReport check_linear_space() const;

private:
    std::vector<Clique> points_;
    std::vector<std::vector<std::uint32_t>> points_on_;
};

struct Reconstruction {
    UpsilonClasses classes;
    ReconstructedSpace space;
    bool attempted = false;
};

Reconstruction reconstruct(std::span<const DimensionedClique> b, const LineGraph& g);

struct EquivalenceReport {
    std::size_t source_points = 0;
    std::size_t reconstructed_points = 0;
    bool bijection = false;
    bool incidence = false;
    bool collinearity = false;
    std::uint64_t incidence_mismatches = 0;
    std::uint64_t collinearity_mismatches = 0;
    std::vector<std::int64_t> point_to_bundle;  // -1 where U has no semibundle in ℬ
    std::string bijection_witness;
    std::string incidence_witness;
    std::string collinearity_witness;

    bool passed() const noexcept { return bijection && incidence && collinearity; }
};

// Builds U ↦ ⟦ℒ_U(X), Υ∅⟧ from the members of ℬ whose lines all pass through
// the proper point U, then checks that it is a bijection onto the
// reconstructed points preserving and reflecting incidence and collinearity.
// `perm` maps source line ids to graph ids.
EquivalenceReport verify_equivalence(const SpineSpace& space, std::span<const DimensionedClique> b,
                                     const Reconstruction& recon, std::span<const LineId> perm);

struct UpsilonGeometryReport {
    std::uint64_t pairs = 0;
    std::uint64_t mismatches = 0;       // Υ∅ disagrees with same type and vertex
    std::uint64_t unclassified = 0;     // members of ℬ that are not semibundles
    std::string witness;
    bool passed() const noexcept { return mismatches == 0 && unclassified == 0; }
};

// Compares Υ∅ on ℬ with "both stars or both tops, and the same vertex".
// `b_source` holds members of ℬ in source line ids; `g` is the source graph.
UpsilonGeometryReport check_upsilon_geometry(const SpineSpace& space, const CliqueClassifier& classifier,
                                             std::span<const Clique> b_source, const LineGraph& g);

}  // namespace spine
