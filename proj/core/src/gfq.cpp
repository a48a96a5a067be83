#include "spine/gfq.hpp"

#include <algorithm>
#include <numeric>

#include "spine/errors.hpp"

namespace spine {
namespace {

int inverse_mod(int a, int q) {
    // q is prime, so a^(q-2) is the inverse.
    int r = 1;
    int base = a % q;
    for (int e = q - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
    }
    return r;
}

// In-place reduced row echelon form of a rows x cols matrix. Returns the rank;
// the first `rank` rows hold the reduced basis.
int reduce(std::vector<std::uint8_t>& a, int rows, int cols, int q) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[r * cols + c] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank) {
            std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols,
                             a.begin() + rank * cols);
        }
        const int inv = inverse_mod(a[rank * cols + c], q);
        for (int j = c; j < cols; ++j) a[rank * cols + j] = static_cast<std::uint8_t>(a[rank * cols + j] * inv % q);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const int f = a[r * cols + c];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j) {
                const int v = a[r * cols + j] - f * a[rank * cols + j];
                a[r * cols + j] = static_cast<std::uint8_t>(((v % q) + q) % q);
            }
        }
        ++rank;
    }
    return rank;
}

void require_same_field(const Subspace& a, const Subspace& b) {
    if (!(a.field() == b.field())) throw InputError("subspaces live in different ambient spaces");
}

// Pivot column of each canonical row.
std::vector<int> pivots(const Subspace& s) {
    std::vector<int> p;
    p.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        auto r = s.row(i);
        p.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](auto x) { return x != 0; }) - r.begin()));
    }
    return p;
}

}  // namespace

bool is_prime(int q) noexcept {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::make(int q, int n) {
    if (!is_prime(q)) throw InputError("field order q=" + std::to_string(q) + " is not prime");
    if (q > 251) throw InputError("field order q=" + std::to_string(q) + " exceeds byte storage");
    if (n < 3) throw InputError("ambient dimension n=" + std::to_string(n) + " must be at least 3");
    return FieldSpec{q, n};
}

Subspace Subspace::zero(const FieldSpec& f) {
    Subspace s;
    s.field_ = f;
    return s;
}

Subspace Subspace::whole(const FieldSpec& f) {
    std::vector<std::uint8_t> id(static_cast<std::size_t>(f.n * f.n), 0);
    for (int i = 0; i < f.n; ++i) id[i * f.n + i] = 1;
    Subspace s;
    s.field_ = f;
    s.dim_ = f.n;
    s.e_ = std::move(id);
    return s;
}

Subspace Subspace::from_rows(const FieldSpec& f, std::vector<std::uint8_t> flat, int nrows) {
    const int rank = reduce(flat, nrows, f.n, f.q);
    flat.resize(static_cast<std::size_t>(rank * f.n));
    Subspace s;
    s.field_ = f;
    s.dim_ = rank;
    s.e_ = std::move(flat);
    return s;
}

std::span<const std::uint8_t> Subspace::row(int i) const noexcept {
    return std::span<const std::uint8_t>(e_).subspan(static_cast<std::size_t>(i * field_.n),
                                                     static_cast<std::size_t>(field_.n));
}

std::vector<std::vector<int>> Subspace::rows() const {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < dim_; ++i) {
        auto r = row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

std::string Subspace::digits() const {
    std::string s;
    s.reserve(e_.size());
    for (auto x : e_) s += static_cast<char>('0' + x);
    return s;
}

std::size_t Subspace::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(dim_));
    mix(static_cast<std::uint64_t>(field_.n));
    for (auto x : e_) mix(x);
    return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
    if (auto c = a.field_.n <=> b.field_.n; c != 0) return c;
    if (auto c = a.field_.q <=> b.field_.q; c != 0) return c;
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

Subspace rref(const FieldSpec& f, std::span<const std::vector<int>> rows) {
    std::vector<std::uint8_t> flat;
    flat.reserve(rows.size() * static_cast<std::size_t>(f.n));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != f.n) throw InputError("row length does not match ambient dimension");
        for (int x : r) {
            if (x < 0 || x >= f.q) throw InputError("matrix entry " + std::to_string(x) + " outside [0,q)");
            flat.push_back(static_cast<std::uint8_t>(x));
        }
    }
    return Subspace::from_rows(f, std::move(flat), static_cast<int>(rows.size()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_field(a, b);
    std::vector<std::uint8_t> flat(a.entries().begin(), a.entries().end());
    flat.insert(flat.end(), b.entries().begin(), b.entries().end());
    return Subspace::from_rows(a.field(), std::move(flat), a.dim() + b.dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_field(a, b);
    // Zassenhaus: reduce [a | a ; b | 0]; rows with vanishing left half span a ∩ b.
    const int n = a.ambient();
    const int rows = a.dim() + b.dim();
    std::vector<std::uint8_t> m(static_cast<std::size_t>(rows * 2 * n), 0);
    for (int i = 0; i < a.dim(); ++i) {
        auto r = a.row(i);
        std::copy(r.begin(), r.end(), m.begin() + i * 2 * n);
        std::copy(r.begin(), r.end(), m.begin() + i * 2 * n + n);
    }
    for (int i = 0; i < b.dim(); ++i) {
        auto r = b.row(i);
        std::copy(r.begin(), r.end(), m.begin() + (a.dim() + i) * 2 * n);
    }
    const int rank = reduce(m, rows, 2 * n, a.field().q);
    std::vector<std::uint8_t> out;
    int count = 0;
    for (int i = 0; i < rank; ++i) {
        const auto* row = m.data() + i * 2 * n;
        if (std::all_of(row, row + n, [](auto x) { return x == 0; })) {
            out.insert(out.end(), row + n, row + 2 * n);
            ++count;
        }
    }
    return Subspace::from_rows(a.field(), std::move(out), count);
}

bool contains_vector(const Subspace& a, std::span<const std::uint8_t> v) {
    const int n = a.ambient();
    const int q = a.field().q;
    if (static_cast<int>(v.size()) != n) throw InputError("vector length does not match ambient dimension");
    std::vector<int> w(v.begin(), v.end());
    const auto piv = pivots(a);
    for (int i = 0; i < a.dim(); ++i) {
        const int f = w[piv[i]];
        if (f == 0) continue;
        auto r = a.row(i);
        for (int j = 0; j < n; ++j) w[j] = ((w[j] - f * r[j]) % q + q) % q;
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool contains(const Subspace& a, const Subspace& b) {
    require_same_field(a, b);
    if (b.dim() > a.dim()) return false;
    for (int i = 0; i < b.dim(); ++i)
        if (!contains_vector(a, b.row(i))) return false;
    return true;
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& f, int k) {
    if (k < 0 || k > f.n) throw InputError("subspace dimension " + std::to_string(k) + " out of range");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(f));
        return out;
    }
    const int n = f.n;
    std::vector<int> piv(static_cast<std::size_t>(k));
    std::iota(piv.begin(), piv.end(), 0);
    for (;;) {
        // Free cells: right of the row pivot, not in a pivot column.
        std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
        for (int p : piv) is_piv[p] = true;
        std::vector<int> cells;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) cells.push_back(i * n + j);
        std::vector<std::uint8_t> m(static_cast<std::size_t>(k * n), 0);
        for (int i = 0; i < k; ++i) m[i * n + piv[i]] = 1;
        std::vector<int> digit(cells.size(), 0);
        for (;;) {
            for (std::size_t c = 0; c < cells.size(); ++c) m[cells[c]] = static_cast<std::uint8_t>(digit[c]);
            out.push_back(Subspace::from_rows(f, m, k));
            std::size_t c = 0;
            while (c < digit.size() && ++digit[c] == f.q) digit[c++] = 0;
            if (c == digit.size()) break;
        }
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_between(const Subspace& h, const Subspace& b, int k) {
    require_same_field(h, b);
    if (!contains(b, h)) throw InputError("enumerate_between: lower subspace is not inside upper subspace");
    if (k < h.dim() || k > b.dim()) throw InputError("enumerate_between: dimension outside [dim h, dim b]");
    const FieldSpec& f = h.field();
    const int n = f.n;
    // Extend h to a basis of b; the extra rows form a complement.
    std::vector<std::vector<std::uint8_t>> comp;
    Subspace cur = h;
    for (int i = 0; i < b.dim() && cur.dim() < b.dim(); ++i) {
        auto r = b.row(i);
        if (contains_vector(cur, r)) continue;
        comp.emplace_back(r.begin(), r.end());
        std::vector<std::uint8_t> flat(cur.entries().begin(), cur.entries().end());
        flat.insert(flat.end(), r.begin(), r.end());
        cur = Subspace::from_rows(f, std::move(flat), cur.dim() + 1);
    }
    const int r = static_cast<int>(comp.size());
    std::vector<Subspace> out;
    for (const auto& s : enumerate_subspaces(FieldSpec{f.q, r}, k - h.dim())) {
        std::vector<std::uint8_t> flat(h.entries().begin(), h.entries().end());
        for (int i = 0; i < s.dim(); ++i) {
            auto coeff = s.row(i);
            std::vector<int> v(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < r; ++j)
                for (int t = 0; t < n; ++t) v[t] = (v[t] + coeff[j] * comp[j][t]) % f.q;
            flat.insert(flat.end(), v.begin(), v.end());
        }
        out.push_back(Subspace::from_rows(f, std::move(flat), h.dim() + s.dim()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    std::uint64_t num = 1, den = 1;
    std::uint64_t qn = 1;
    for (int i = 0; i < n - k; ++i) qn *= static_cast<std::uint64_t>(q);
    // prod_{i=1..k} (q^{n-k+i} - 1) / (q^i - 1)
    std::uint64_t qi = 1;
    for (int i = 1; i <= k; ++i) {
        qn *= static_cast<std::uint64_t>(q);
        qi *= static_cast<std::uint64_t>(q);
        num *= (qn - 1);
        den *= (qi - 1);
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

LinearMap LinearMap::from_basis_images(const FieldSpec& f,
                                       const std::vector<std::vector<std::uint8_t>>& basis,
                                       const std::vector<std::vector<std::uint8_t>>& images) {
    const int n = f.n;
    if (static_cast<int>(basis.size()) != n || images.size() != basis.size())
        throw InputError("linear map needs n basis rows and n images");
    // Solve P M = C by reducing [P | C].
    std::vector<std::uint8_t> aug(static_cast<std::size_t>(n * 2 * n), 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(basis[i].size()) != n || static_cast<int>(images[i].size()) != n)
            throw InputError("linear map row length mismatch");
        std::copy(basis[i].begin(), basis[i].end(), aug.begin() + i * 2 * n);
        std::copy(images[i].begin(), images[i].end(), aug.begin() + i * 2 * n + n);
    }
    const int rank = reduce(aug, n, 2 * n, f.q);
    for (int i = 0; i < n; ++i)
        if (rank < n || aug[i * 2 * n + i] != 1) throw InputError("linear map basis is singular");
    LinearMap lm;
    lm.field_ = f;
    lm.m_.resize(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        std::copy(aug.begin() + i * 2 * n + n, aug.begin() + (i + 1) * 2 * n, lm.m_.begin() + i * n);
    return lm;
}

std::vector<std::uint8_t> LinearMap::apply(std::span<const std::uint8_t> v) const {
    const int n = field_.n;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        int acc = 0;
        for (int i = 0; i < n; ++i) acc += v[i] * m_[i * n + j];
        out[j] = static_cast<std::uint8_t>(acc % field_.q);
    }
    return out;
}

Subspace LinearMap::apply(const Subspace& s) const {
    std::vector<std::uint8_t> flat;
    flat.reserve(s.entries().size());
    for (int i = 0; i < s.dim(); ++i) {
        auto img = apply(s.row(i));
        flat.insert(flat.end(), img.begin(), img.end());
    }
    return Subspace::from_rows(field_, std::move(flat), s.dim());
}

}  // namespace spine
