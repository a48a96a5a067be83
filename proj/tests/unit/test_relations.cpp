#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "spine/errors.hpp"
#include "spine/relations.hpp"

using namespace spine;

namespace {

// Closures meet and share a star (same H, B1 ∩ B2 of dim k) or a top (same B,
// H1 + H2 of dim k). The meeting point is the middle subspace.
std::optional<Subspace> meet_in_strong(const SpineLine& a, const SpineLine& b, int k) {
    if (a.h == b.h && !(a.b == b.b)) {
        auto u = intersect(a.b, b.b);
        if (u.dim() == k) return u;
    }
    if (a.b == b.b && !(a.h == b.h)) {
        auto u = sum(a.h, b.h);
        if (u.dim() == k) return u;
    }
    return std::nullopt;
}

void compare_with_closure_rule(const SpineSpace& s, const LineGraph& pi, const LineGraph& rho) {
    const auto& ls = s.lines();
    std::uint64_t pi_bad = 0, rho_bad = 0;
    for (LineId a = 0; a < ls.size(); ++a)
        for (LineId b = a + 1; b < ls.size(); ++b) {
            const auto u = meet_in_strong(ls[a], ls[b], s.params().k);
            pi_bad += pi.adjacent(a, b) != u.has_value();
            rho_bad += rho.adjacent(a, b) != (u && s.is_proper(*u));
        }
    CHECK(pi_bad == 0);
    CHECK(rho_bad == 0);
}

}  // namespace

TEST_CASE("graph construction rejects bad edges and merges duplicates") {
    CHECK_THROWS_AS(LineGraph::from_edges(3, Delta::pi, {{0, 3}}), InputError);
    CHECK_THROWS_AS(LineGraph::from_edges(3, Delta::pi, {{1, 1}}), InputError);
    const auto g = LineGraph::from_edges(4, Delta::rho, {{0, 1}, {1, 0}, {2, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.neighbours(1).size() == 1);
}

TEST_CASE("pi and rho agree with the closure rule") {
    const auto& w = fixture::small_bundle();
    compare_with_closure_rule(w.space, w.pi, w.rho);
    const auto& n = fixture::neighbourhood();
    compare_with_closure_rule(n.space, n.pi, n.rho);
}

TEST_CASE("rho is contained in pi and neighbour lists are sorted") {
    const auto& w = fixture::small_bundle();
    for (LineId a = 0; a < w.rho.size(); ++a) {
        for (auto b : w.rho.neighbours(a)) CHECK(w.pi.adjacent(a, b));
        const auto nb = w.pi.neighbours(a);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
    }
    CHECK(w.rho.edge_count() < w.pi.edge_count());
}

TEST_CASE("run-length rows round-trip and sum to the line count") {
    const auto& g = fixture::neighbourhood().rho;
    const auto rows = encode_rle(g);
    REQUIRE(rows.size() == g.size());
    for (const auto& r : rows) {
        std::size_t total = 0, pos = 0;
        while (pos < r.size()) {
            const auto next = r.find(',', pos);
            total += std::stoul(r.substr(pos, next - pos));
            pos = next == std::string::npos ? r.size() : next + 1;
        }
        CHECK(total == g.size());
    }
    CHECK(decode_rle(Delta::rho, rows) == g);
}

TEST_CASE("malformed run-length rows are rejected") {
    const std::vector<std::string> short_row{"0,1", "1"};
    CHECK_THROWS_AS(decode_rle(Delta::pi, short_row), InputError);
    const std::vector<std::string> asym{"1,1", "2"};
    CHECK_THROWS_AS(decode_rle(Delta::pi, asym), InputError);
    const std::vector<std::string> loop{"0,1,1", "1,1", "3"};
    CHECK_THROWS_AS(decode_rle(Delta::pi, loop), InputError);
    const std::vector<std::string> junk{"x", "2"};
    CHECK_THROWS_AS(decode_rle(Delta::pi, junk), InputError);
    const std::vector<std::string> ok{"1,1", "0,1,1"};
    CHECK(decode_rle(Delta::pi, ok).edge_count() == 1);
}

TEST_CASE("stripping is a seeded isomorphism") {
    const auto& g = fixture::neighbourhood().pi;
    const auto a = strip(g, 11), b = strip(g, 11), c = strip(g, 12);
    CHECK(a.perm == b.perm);
    CHECK(a.graph == b.graph);
    CHECK(a.perm != c.perm);
    std::vector<LineId> sorted = a.perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<LineId> ids(g.size());
    std::iota(ids.begin(), ids.end(), 0);
    CHECK(sorted == ids);
    std::size_t moved = 0;
    for (LineId x = 0; x < g.size(); ++x)
        for (LineId y = x + 1; y < g.size(); ++y) moved += g.adjacent(x, y) != a.graph.adjacent(a.perm[x], a.perm[y]);
    CHECK(moved == 0);
    const auto inv = invert_permutation(a.perm);
    for (LineId x = 0; x < g.size(); ++x) CHECK(inv[a.perm[x]] == x);
    CHECK(a.graph.edge_count() == g.edge_count());
}
