#include "spine/checks.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <set>
#include <unordered_map>

namespace spine {
namespace {

std::string join(std::span<const LineId> ls) {
    std::string s = "{";
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + std::to_string(ls[i]);
    return s + "}";
}

void fail(CheckReport& r, std::string witness) {
    ++r.violations;
    r.passed = false;
    if (r.witness.empty()) r.witness = std::move(witness);
}

std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::uint64_t pair_key(LineId a, LineId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

CheckReport check_gaussian_binomials(std::span<const int> qs, int n_max) {
    CheckReport r{"gaussian-binomial-counts", true, 0, 0, {}};
    for (int q : qs)
        for (int n = 3; n <= n_max; ++n) {
            const auto f = FieldSpec::make(q, n);
            for (int k = 0; k <= n; ++k) {
                ++r.checked;
                const auto got = enumerate_subspaces(f, k).size();
                const auto want = gaussian_binomial(n, k, q);
                if (got != want)
                    fail(r, "q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                std::to_string(got) + " subspaces, binomial " + std::to_string(want));
            }
        }
    return r;
}

CheckReport check_clique_classification(const GeometryCatalog& cat, const LineGraph& g,
                                        std::span<const Clique> maximal) {
    CheckReport r{std::string("maximal-") + std::string(to_string(g.kind())) + "-cliques", true, 0, 0, {}};
    std::set<Clique> geo;
    for (const auto& c : maximal_geometric_cliques(cat, g.kind())) geo.insert(c.lines);
    const std::set<Clique> found(maximal.begin(), maximal.end());
    r.checked = found.size() + geo.size();
    for (const auto& c : found)
        if (!geo.contains(c)) fail(r, "maximal clique " + join(c) + " is not a geometric clique");
    for (const auto& c : geo)
        if (!found.contains(c)) fail(r, "geometric clique " + join(c) + " is not a maximal clique");
    return r;
}

CheckReport check_exchange(const GeometryCatalog& cat, const LineGraph& rho, std::span<const Clique> maximal) {
    CheckReport r{"exchange-on-semiaffine-semiflats", true, 0, 0, {}};
    const CliqueClassifier cls(cat, Delta::rho);
    for (const auto& k : maximal) {
        ++r.checked;
        const auto* g = cls.classify(k);
        if (g == nullptr) {
            fail(r, "maximal clique " + join(k) + " is unclassified");
            continue;
        }
        const bool want = is_semiaffine_semiflat(g->kind);
        if (podmianka(k, rho) != want)
            fail(r, std::string(to_string(g->kind)) + " " + join(k) + (want ? " lacks" : " has") + " the exchange property");
    }
    return r;
}

CheckReport check_ternary_pencils(const GeometryCatalog& cat, const LineGraph& g, std::span<const Clique> maximal,
                                  const TripleSweep& sweep) {
    const bool pi = g.kind() == Delta::pi;
    CheckReport r{std::string("ternary-") + std::string(to_string(g.kind())) + "-pencils", true, 0, 0, {}};
    std::unordered_map<std::uint64_t, std::size_t> owner;
    const auto& pencils = cat.pencils();
    for (std::size_t i = 0; i < pencils.size(); ++i) {
        if (!pi && !pencils[i].proper) continue;
        const auto& p = pencils[i].lines;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) owner.emplace(pair_key(p[a], p[b]), i);
    }
    auto in_pencil = [&](LineId a, LineId b, LineId c) {
        auto it = owner.find(pair_key(a, b));
        if (it == owner.end()) return false;
        const auto& p = pencils[it->second].lines;
        return std::binary_search(p.begin(), p.end(), c);
    };
    std::optional<RhoWitnessIndex> witnesses;
    if (!pi) witnesses.emplace(g);
    auto predicate = [&](LineId a, LineId b, LineId c) {
        return pi ? p_pi(a, b, c, g) : p_rho(a, b, c, g, *witnesses);
    };
    auto test = [&](LineId a, LineId b, LineId c) {
        ++r.checked;
        const bool got = predicate(a, b, c);
        if (got != in_pencil(a, b, c))
            fail(r, "triple " + join(std::vector<LineId>{a, b, c}) + (got ? " passes the predicate outside a pencil"
                                                                          : " lies in a pencil but fails the predicate"));
    };

    std::vector<std::uint64_t> cumulative;
    std::uint64_t total = 0;
    for (const auto& k : maximal) cumulative.push_back(total += choose3(k.size()));
    if (total <= sweep.exhaustive_limit) {
        for (const auto& k : maximal)
            for (std::size_t a = 0; a < k.size(); ++a)
                for (std::size_t b = a + 1; b < k.size(); ++b)
                    for (std::size_t c = b + 1; c < k.size(); ++c) test(k[a], k[b], k[c]);
        return r;
    }
    r.name += " (sampled)";
    std::mt19937_64 rng(sweep.seed);
    for (std::uint64_t s = 0; s < sweep.samples; ++s) {
        const auto at = std::upper_bound(cumulative.begin(), cumulative.end(), rng() % total) - cumulative.begin();
        const auto& k = maximal[static_cast<std::size_t>(at)];
        std::size_t i, j, l;
        do {
            i = rng() % k.size();
            j = rng() % k.size();
            l = rng() % k.size();
        } while (i == j || j == l || i == l);
        test(k[i], k[j], k[l]);
    }
    return r;
}

CheckReport check_pencil_family(const GeometryCatalog& cat, const AbstractRun& run, std::span<const LineId> perm) {
    CheckReport r{std::string("pencil-family-") + std::string(to_string(run.delta)), true, 0, 0, {}};
    const auto inv = invert_permutation(perm);
    const auto found = map_cliques(run.pencils, inv);
    const auto geo = pencil_family(cat, true);
    r.checked = found.size() + geo.size();
    std::vector<Clique> extra, missing;
    std::set_difference(found.begin(), found.end(), geo.begin(), geo.end(), std::back_inserter(extra));
    std::set_difference(geo.begin(), geo.end(), found.begin(), found.end(), std::back_inserter(missing));
    r.violations = extra.size() + missing.size();
    r.passed = r.violations == 0;
    if (!extra.empty())
        r.witness = std::to_string(extra.size()) + " spurious, first " + join(extra[0]);
    else if (!missing.empty())
        r.witness = std::to_string(missing.size()) + " proper pencils missing, first " + join(missing[0]);
    return r;
}

CheckReport check_spanned_maximal(const SpannedFamily& k) {
    CheckReport r{"spanned-cliques-maximal", k.non_maximal_spans == 0, k.generating_triples, k.non_maximal_spans,
                  k.witness};
    return r;
}

CheckReport to_check(std::string name, const UpsilonClasses& c) {
    return CheckReport{std::move(name), c.transitive(), c.chained_triples, c.transitivity_failures, c.witness};
}

CheckReport to_check(std::string name, const UpsilonGeometryReport& r) {
    return CheckReport{std::move(name), r.passed(), r.pairs, r.mismatches + r.unclassified, r.witness};
}

std::vector<CheckReport> to_checks(const EquivalenceReport& r) {
    std::vector<CheckReport> out;
    out.push_back({"bundle-bijection", r.bijection, r.source_points, r.bijection ? 0U : 1U,
                   r.bijection_witness});
    out.push_back({"bundle-incidence", r.incidence, r.source_points, r.incidence_mismatches,
                   r.incidence ? std::string{} : r.incidence_witness + r.bijection_witness});
    out.push_back({"bundle-collinearity", r.collinearity, r.source_points * (r.source_points - 1) / 2,
                   r.collinearity_mismatches,
                   r.collinearity ? std::string{} : r.collinearity_witness + r.bijection_witness});
    return out;
}

std::vector<CheckReport> to_checks(const CounterexampleReport& r) {
    std::vector<CheckReport> out;
    out.push_back({"homology-bijection", r.bijection, 1, r.bijection ? 0U : 1U, {}});
    out.push_back({"homology-preserves-pi", r.pi_violations == 0, r.pairs, r.pi_violations, {}});
    out.push_back({"homology-preserves-rho", r.rho_violations == 0, r.pairs, r.rho_violations, {}});
    out.push_back({"homology-moved-lines", r.moved_rule_mismatches == 0, r.moved_lines, r.moved_rule_mismatches, {}});
    const bool split = r.witness_found && !r.bundle_image_is_bundle;
    std::string w = r.witness_found ? "U=" + std::to_string(r.u) + " U'=" + std::to_string(r.u_prime) +
                                          " L=" + std::to_string(r.line) + " Y=" + std::to_string(r.top)
                                    : r.witness;
    out.push_back({"bundle-not-preserved", split, 1, split ? 0U : 1U, std::move(w)});
    return out;
}

}  // namespace spine
