#pragma once

// Shared spaces for the test binaries, built once per process.

#include "spine/geometry_families.hpp"
#include "spine/relations.hpp"
#include "spine/spine_space.hpp"

namespace fixture {

struct World {
    spine::SpineSpace space;
    spine::GeometryCatalog catalog;
    spine::LineGraph pi;
    spine::LineGraph rho;

    explicit World(const spine::SpineParams& p)
        : space(spine::build_spine(p)), catalog(space), pi(spine::compute_pi(space)), rho(spine::compute_rho(space)) {}
    World(const World&) = delete;
    World& operator=(const World&) = delete;

    const spine::LineGraph& graph(spine::Delta d) const { return d == spine::Delta::pi ? pi : rho; }
};

// q=2, n=6, k=2, m=1, w=3: bundle gate holds.
inline const World& small_bundle() {
    static const World w(spine::SpineParams::make(2, 6, 2, 1, 3));
    return w;
}

// q=2, n=6, k=3, m=0, w=1: pencil gate holds.
inline const World& pencil_case() {
    static const World w(spine::SpineParams::make(2, 6, 3, 0, 1));
    return w;
}

// q=3, n=5, k=2, m=1, w=2: the neighbourhood case.
inline const World& neighbourhood() {
    static const World w(spine::SpineParams::make(3, 5, 2, 1, 2));
    return w;
}

}  // namespace fixture
