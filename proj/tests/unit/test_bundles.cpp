#include <doctest.h>

#include "fixtures.hpp"
#include "spine/bundles.hpp"
#include "spine/pipeline.hpp"

using namespace spine;

namespace {

// Lines 0..5; 0-3, 1-4, 2-5 adjacent, plus 0-5.
LineGraph matching() { return LineGraph::from_edges(6, Delta::pi, {{0, 3}, {1, 4}, {2, 5}, {0, 5}}); }

}  // namespace

TEST_CASE("upsilon counts lines of the first clique with a partner") {
    const auto g = matching();
    CHECK(upsilon(Clique{0, 1, 2}, Clique{3, 4}, g));
    CHECK_FALSE(upsilon(Clique{0, 2}, Clique{4}, g));
    CHECK(upsilon(Clique{0, 2}, Clique{5}, g));  // 0-5 and 2-5
    // equal lines count as related
    CHECK(upsilon(Clique{0, 1}, Clique{0, 1}, g));
}

TEST_CASE("upsilon-empty needs both directions and disjoint or equal cliques") {
    const auto g = matching();
    CHECK(upsilon_empty(Clique{0, 1, 2}, Clique{3, 4, 5}, g));
    CHECK_FALSE(upsilon_empty(Clique{0, 1, 2}, Clique{2, 3, 4}, g));
    CHECK(upsilon_empty(Clique{0, 1}, Clique{0, 1}, g));
    CHECK_FALSE(upsilon_empty(Clique{0, 1}, Clique{5}, g));
}

TEST_CASE("classes of a chain are reported as a transitivity failure") {
    // a~b and b~c but not a~c
    const auto g = LineGraph::from_edges(6, Delta::pi, {{0, 2}, {1, 3}, {2, 4}, {3, 5}});
    const std::vector<DimensionedClique> b{{{0, 1}, 3}, {{2, 3}, 3}, {{4, 5}, 3}};
    const auto c = upsilon_classes(b, g);
    CHECK(c.related_pairs == 2);
    CHECK(c.transitivity_failures == 2);
    CHECK_FALSE(c.transitive());
    CHECK(c.class_count == 1);
    CHECK(bundle_of(0, b, c) == Clique{0, 1, 2, 3, 4, 5});
}

TEST_CASE("reconstructed space of a triangle") {
    // three points as bundles of lines 0,1,2
    const ReconstructedSpace r({{0, 2}, {0, 1}, {1, 2}, {0, 1}}, 3);
    REQUIRE(r.points().size() == 3);
    const auto p01 = r.find({0, 1});
    REQUIRE(p01.has_value());
    CHECK(r.incident(*p01, 0));
    CHECK_FALSE(r.incident(*p01, 2));
    CHECK(r.points_on(0).size() == 2);
    const std::uint32_t two[2] = {0, 1};
    const std::uint32_t three[3] = {0, 1, 2};
    CHECK(r.collinear(two));
    CHECK_FALSE(r.collinear(three));
    CHECK(r.check_linear_space().passed);
    CHECK_FALSE(r.find({0, 2, 3}).has_value());
}

TEST_CASE("linear-space check flags short lines and doubled joins") {
    const ReconstructedSpace r({{0, 1, 2}, {0, 1}}, 4);
    const auto c = r.check_linear_space();
    CHECK_FALSE(c.passed);
    // lines 2 and 3 sit on fewer than two points; the two points share lines 0 and 1
    CHECK(c.violations == 3);
}

TEST_CASE("abstract run on the small bundle config finds one semibundle per alpha-star point") {
    const auto& w = fixture::small_bundle();
    const auto st = strip(w.pi, 1);
    const auto run = run_abstract(st.graph, {false});
    CHECK(run.b.size() == 196);
    CHECK_FALSE(run.recon.attempted);
    for (const auto& c : run.b) CHECK(c.dim >= 3);
}
