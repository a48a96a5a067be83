#pragma once

// Exact linear algebra over a prime field GF(q).
//
// Subspaces of GF(q)^n are held in reduced row-echelon form with strictly
// increasing pivots, so two subspaces are equal iff their stored bases are
// identical. All operations are pure.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spine {

bool is_prime(int q) noexcept;

struct FieldSpec {
    int q = 2;
    int n = 3;

    // Validated construction: q prime, n >= 3. Throws InputError.
    static FieldSpec make(int q, int n);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Subspace {
public:
    Subspace() = default;

    static Subspace zero(const FieldSpec& f);
    static Subspace whole(const FieldSpec& f);

    // Canonical subspace spanned by `nrows` rows stored row-major in `flat`.
    // Entries must already be reduced mod q.
    static Subspace from_rows(const FieldSpec& f, std::vector<std::uint8_t> flat, int nrows);

    const FieldSpec& field() const noexcept { return field_; }
    int dim() const noexcept { return dim_; }
    int ambient() const noexcept { return field_.n; }

    std::span<const std::uint8_t> row(int i) const noexcept;
    std::span<const std::uint8_t> entries() const noexcept { return e_; }
    std::vector<std::vector<int>> rows() const;

    // Row-major digit string of the canonical basis, e.g. "100011" for two rows of length 3.
    std::string digits() const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    // Orders by dimension, then lexicographically on the canonical basis.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

private:
    FieldSpec field_{};
    int dim_ = 0;
    std::vector<std::uint8_t> e_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept { return s.hash(); }
};

// Canonical form of the row span. Throws InputError for entries outside [0,q)
// or rows of the wrong length.
Subspace rref(const FieldSpec& f, std::span<const std::vector<int>> rows);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// True iff b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b);
bool contains_vector(const Subspace& a, std::span<const std::uint8_t> v);

// All k-subspaces of GF(q)^n, sorted. Generated from pivot patterns, so the
// list is duplicate free without filtering.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int k);

// All k-subspaces U with h <= U <= b, sorted.
std::vector<Subspace> enumerate_between(const Subspace& h, const Subspace& b, int k);

std::uint64_t gaussian_binomial(int n, int k, int q);

// Invertible linear map acting on row vectors, v -> v M.
class LinearMap {
public:
    // The unique map sending basis row i to image row i. `basis` must be invertible.
    static LinearMap from_basis_images(const FieldSpec& f,
                                       const std::vector<std::vector<std::uint8_t>>& basis,
                                       const std::vector<std::vector<std::uint8_t>>& images);

    std::vector<std::uint8_t> apply(std::span<const std::uint8_t> v) const;
    Subspace apply(const Subspace& s) const;
    const FieldSpec& field() const noexcept { return field_; }

private:
    FieldSpec field_{};
    std::vector<std::uint8_t> m_;  // n x n, row-major
};

}  // namespace spine
