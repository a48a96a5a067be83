#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spine/errors.hpp"
#include "spine/geometry_families.hpp"
#include "spine/pencils.hpp"

using namespace spine;

namespace {

// Points and lines of PG(d, 2): one-subspaces and two-subspaces of GF(2)^(d+1),
// a point identified by its nonzero vector code minus one.
std::vector<Clique> projective_lines(int d) {
    std::vector<Clique> out;
    for (const auto& s : oracle::subspaces(2, d + 1, 2)) {
        Clique c;
        for (auto v : s)
            if (v != 0) c.push_back(v - 1);
        out.push_back(c);
    }
    return out;
}

std::vector<Clique> relabel(const std::vector<Clique>& blocks, const std::vector<LineId>& perm) {
    std::vector<Clique> out;
    for (const auto& b : blocks) {
        Clique c;
        for (auto x : b) c.push_back(perm[x]);
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("span dimension of projective spaces") {
    for (int d = 2; d <= 3; ++d) {
        const auto blocks = projective_lines(d);
        Clique pts((1u << (d + 1)) - 1);
        for (LineId i = 0; i < pts.size(); ++i) pts[i] = i;
        CHECK(span_dimension(pts, blocks) == d);
    }
}

TEST_CASE("span dimension is independent of labels") {
    const auto blocks = projective_lines(3);
    Clique pts(15);
    for (LineId i = 0; i < 15; ++i) pts[i] = i;
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<LineId> perm(pts);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(span_dimension(pts, relabel(blocks, perm)) == 3);
    }
    // A plane inside PG(3,2): seven points closed under the lines
    Clique plane_pts;
    const auto planes = oracle::subspaces(2, 4, 3);
    for (auto v : planes[0])
        if (v != 0) plane_pts.push_back(v - 1);
    CHECK(span_dimension(plane_pts, blocks) == 2);
}

TEST_CASE("span dimension with no usable blocks counts points") {
    const std::vector<Clique> none;
    CHECK(span_dimension(Clique{4, 7, 9}, none) == 2);
    CHECK(clique_dimension(Clique{1, 2, 3}, std::vector<Clique>{{1, 2, 3}}) == 1);
    CHECK_THROWS_AS(clique_dimension(Clique{1, 2, 3}, none), ContractError);
}

TEST_CASE("pencils of lines are pairwise related and proper pencils are rho-cliques") {
    const auto& w = fixture::small_bundle();
    for (const auto& p : w.catalog.pencils()) {
        REQUIRE(p.lines.size() >= 2);
        for (std::size_t i = 0; i < p.lines.size(); ++i)
            for (std::size_t j = i + 1; j < p.lines.size(); ++j) {
                CHECK(w.pi.adjacent(p.lines[i], p.lines[j]));
                CHECK(w.rho.adjacent(p.lines[i], p.lines[j]) == p.proper);
            }
    }
}

TEST_CASE("ternary predicates hold on proper pencils") {
    const auto& w = fixture::pencil_case();
    const RhoWitnessIndex witnesses(w.rho);
    std::size_t seen = 0;
    for (const auto& p : w.catalog.pencils()) {
        if (!p.proper || p.lines.size() < 3) continue;
        CHECK(p_pi(p.lines[0], p.lines[1], p.lines[2], w.pi));
        CHECK(p_rho(p.lines[0], p.lines[1], p.lines[2], w.rho, witnesses));
        if (++seen == 50) break;
    }
    CHECK(seen == 50);
    CHECK_FALSE(p_pi(0, 0, 1, w.pi));
}

TEST_CASE("pencil family under pi matches the geometry on the pencil-gate config") {
    const auto& w = fixture::pencil_case();
    const auto fam = family_P(w.pi);
    CHECK(fam.inconsistent == 0);
    // triples only see pencils of three or more lines; parallel classes of an
    // affine plane over GF(2) have two
    auto geo = pencil_family(w.catalog, true);
    for (const auto& p : pencil_family(w.catalog, false))
        if (p.size() >= 3) geo.push_back(p);
    std::sort(geo.begin(), geo.end());
    CHECK(fam.pencils == geo);
}

TEST_CASE("parallel detection separates parallel pencils on the pencil-gate config") {
    const auto& w = fixture::pencil_case();
    const auto fam = family_P(w.pi);
    const auto det = detect_parallel(fam.pencils, w.pi);
    CHECK(det.proper == pencil_family(w.catalog, true));
    std::vector<Clique> parallel;
    for (const auto& p : pencil_family(w.catalog, false))
        if (p.size() >= 3) parallel.push_back(p);
    CHECK(det.parallel == parallel);
    std::map<PlaneKind, std::size_t> kinds;
    for (const auto& p : w.catalog.planes()) ++kinds[p.kind];
    CHECK(det.affine_planes == kinds[PlaneKind::affine]);
}

TEST_CASE("family B keeps cliques of dimension three or more") {
    const std::vector<DimensionedClique> k0{{{1, 2, 3}, 1}, {{1, 4, 5, 6}, 3}, {{7, 8, 9}, 2}, {{2, 5, 9}, 4}};
    const auto b = family_B(k0);
    REQUIRE(b.size() == 2);
    CHECK(b[0].dim == 3);
    CHECK(b[1].dim == 4);
}
