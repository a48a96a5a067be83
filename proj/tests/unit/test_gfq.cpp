#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "spine/errors.hpp"
#include "spine/gfq.hpp"

using namespace spine;

namespace {

oracle::VecSet vectors_of(const Subspace& s) {
    const int q = s.field().q, n = s.field().n;
    oracle::VecSet out{0};
    for (int i = 0; i < s.dim(); ++i) {
        std::vector<int> row(s.row(i).begin(), s.row(i).end());
        out = oracle::extend(out, oracle::code_of(row, q), q, n);
    }
    return out;
}

Subspace random_subspace(const FieldSpec& f, int rows, std::mt19937& rng) {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(f.n)));
    for (auto& row : r)
        for (auto& x : row) x = static_cast<int>(rng() % static_cast<unsigned>(f.q));
    return rref(f, r);
}

}  // namespace

TEST_CASE("FieldSpec::make rejects composite q and tiny n") {
    CHECK_THROWS_AS(FieldSpec::make(4, 5), InputError);
    CHECK_THROWS_AS(FieldSpec::make(2, 2), InputError);
    CHECK_NOTHROW(FieldSpec::make(5, 3));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("rref rejects entries outside the field and ragged rows") {
    const auto f = FieldSpec::make(3, 3);
    const std::vector<std::vector<int>> bad_entry{{0, 3, 1}};
    const std::vector<std::vector<int>> bad_len{{1, 0}};
    CHECK_THROWS_AS(rref(f, bad_entry), InputError);
    CHECK_THROWS_AS(rref(f, bad_len), InputError);
}

TEST_CASE("rref is canonical: equal spans give equal bases") {
    const auto f = FieldSpec::make(3, 4);
    const std::vector<std::vector<int>> a{{1, 2, 0, 1}, {0, 1, 1, 2}};
    const std::vector<std::vector<int>> b{{1, 0, 1, 0}, {1, 1, 2, 2}, {1, 2, 0, 1}};  // a0-2a1, a0+2a1, a0
    const auto sa = rref(f, a), sb = rref(f, b);
    CHECK(sa.dim() == 2);
    CHECK(sb.dim() == 2);
    CHECK(vectors_of(sa) == vectors_of(sb));
    CHECK(sa == sb);
    CHECK(sa.digits() == sb.digits());
}

TEST_CASE("sum and intersection agree with vector sets") {
    std::mt19937 rng(7);
    for (int q : {2, 3, 5}) {
        const auto f = FieldSpec::make(q, 4);
        for (int t = 0; t < 40; ++t) {
            const auto a = random_subspace(f, 1 + t % 3, rng);
            const auto b = random_subspace(f, 1 + (t / 3) % 3, rng);
            const auto va = vectors_of(a), vb = vectors_of(b);
            std::vector<std::uint32_t> meet;
            std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(meet));
            CHECK(vectors_of(intersect(a, b)) == meet);
            auto join = va;
            for (auto v : vb) join = oracle::extend(join, v, q, 4);
            CHECK(vectors_of(sum(a, b)) == join);
            // dim(A+B) + dim(A∩B) = dim A + dim B
            CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
            CHECK(contains(sum(a, b), a));
            CHECK(contains(a, intersect(a, b)));
        }
    }
}

TEST_CASE("enumeration matches the vector-set oracle") {
    for (int q : {2, 3})
        for (int n = 3; n <= 4; ++n) {
            const auto f = FieldSpec::make(q, n);
            for (int k = 0; k <= n; ++k) {
                const auto got = enumerate_subspaces(f, k);
                std::set<oracle::VecSet> mine;
                for (const auto& s : got) mine.insert(vectors_of(s));
                const auto ref = oracle::subspaces(q, n, k);
                CHECK(mine.size() == got.size());
                CHECK(std::set<oracle::VecSet>(ref.begin(), ref.end()) == mine);
                CHECK(std::is_sorted(got.begin(), got.end()));
            }
        }
}

TEST_CASE("gaussian binomials: known values and symmetry") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(6, 2, 2) == 651);
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    CHECK(gaussian_binomial(5, 2, 3) == 1210);
    CHECK(gaussian_binomial(5, 0, 7) == 1);
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k, 3) == gaussian_binomial(n, n - k, 3));
}

TEST_CASE("enumerate_between lists the subspaces of an interval") {
    const auto f = FieldSpec::make(2, 5);
    const std::vector<std::vector<int>> hr{{1, 0, 0, 0, 0}};
    const std::vector<std::vector<int>> br{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}};
    const auto h = rref(f, hr), b = rref(f, br);
    const auto got = enumerate_between(h, b, 2);
    std::size_t want = 0;
    for (const auto& u : enumerate_subspaces(f, 2)) want += contains(u, h) && contains(b, u);
    CHECK(got.size() == want);
    CHECK(got.size() == 3);
    for (const auto& u : got) CHECK((contains(u, h) && contains(b, u)));
}

TEST_CASE("linear maps send bases to images and preserve dimension") {
    const auto f = FieldSpec::make(3, 3);
    const std::vector<std::vector<std::uint8_t>> basis{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const std::vector<std::vector<std::uint8_t>> images{{0, 1, 0}, {0, 0, 2}, {1, 1, 0}};
    const auto m = LinearMap::from_basis_images(f, basis, images);
    const std::uint8_t e1[3] = {0, 1, 0};
    CHECK(m.apply(std::span<const std::uint8_t>(e1)) == images[1]);
    for (int k = 0; k <= 3; ++k)
        for (const auto& s : enumerate_subspaces(f, k)) CHECK(m.apply(s).dim() == k);
}
