#pragma once

// Geometric ground truth for the abstract pipeline: flats and semiflats of
// planes, semibundles of maximal strong subspaces, and pencils of lines.

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "spine/cliques.hpp"
#include "spine/spine_space.hpp"

namespace spine {

enum class CliqueKind {
    projective_flat,
    punctured_semiflat,
    affine_semiflat,
    flat,
    semibundle_proper,
    semibundle_improper,
    unclassified
};
std::string_view to_string(CliqueKind k) noexcept;

struct CliqueWitness {
    std::optional<std::size_t> plane;       // index into GeometryCatalog::planes()
    std::optional<Subspace> vertex;         // semibundle or pencil vertex
    std::optional<std::uint32_t> strong;    // strong subspace id
};

struct GeometricClique {
    Clique lines;
    CliqueKind kind = CliqueKind::unclassified;
    CliqueWitness witness;
};

struct GeometricPencil {
    Clique lines;
    Subspace vertex;
    bool proper = true;
    std::size_t plane = 0;
};

class GeometryCatalog {
public:
    explicit GeometryCatalog(const SpineSpace& s);

    const SpineSpace& space() const noexcept { return *space_; }
    const std::vector<Plane>& planes() const noexcept { return planes_; }
    const std::vector<GeometricPencil>& pencils() const noexcept { return pencils_; }

    std::vector<GeometricClique> flats() const;
    // Projective lines of a plane plus one line from each parallel class.
    std::vector<GeometricClique> semiflats() const;
    std::vector<GeometricClique> semibundles(bool proper_only) const;

    // Lines of strong subspace `x` whose closures pass through `vertex`.
    Clique semibundle(std::uint32_t x, const Subspace& vertex) const;

private:
    const SpineSpace* space_;
    std::vector<Plane> planes_;
    std::vector<GeometricPencil> pencils_;
};

// Inclusion-maximal members of the family that maximal cliques of the given
// relation are drawn from: flats and semibundles for pi, semiflats and proper
// semibundles for rho. Duplicates keep the first kind listed.
std::vector<GeometricClique> maximal_geometric_cliques(const GeometryCatalog& cat, Delta d);

class CliqueClassifier {
public:
    CliqueClassifier(const GeometryCatalog& cat, Delta d);
    // Geometric identity of `k`, or nullptr when it matches no family member.
    const GeometricClique* classify(const Clique& k) const;
    const std::vector<GeometricClique>& family() const noexcept { return family_; }

private:
    std::vector<GeometricClique> family_;
    std::map<Clique, std::size_t> index_;
};

// Line sets of the proper (or improper) pencils, sorted and deduplicated.
std::vector<Clique> pencil_family(const GeometryCatalog& cat, bool proper);

// True for semiflats carrying a parallelism selector (punctured or affine planes).
bool is_semiaffine_semiflat(CliqueKind k) noexcept;

}  // namespace spine
