// Acceptance runner: one PASS/FAIL line per criterion, sub-check details
// indented beneath it. Exit status is 0 iff every requested criterion passes.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "spine/checks.hpp"
#include "spinectl/commands.hpp"

using namespace spine;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances. Every criterion is exact: zero violations allowed.
constexpr std::uint64_t kAllowedViolations = 0;
constexpr std::uint64_t kExhaustiveTripleLimit = 10'000'000;
constexpr std::uint64_t kTripleSamples = 1'000'000;
constexpr std::uint64_t kSampleSeed = 20240601;
constexpr std::uint64_t kStripSeed = 1;
constexpr double kCliqueBudgetSeconds = 10 * 60;
constexpr double kReconstructionBudgetSeconds = 30 * 60;
constexpr std::size_t kSmallBundlePoints = 196;

const SpineParams kSmallBundle = SpineParams::make(2, 6, 2, 1, 3);
const SpineParams kPencilGate = SpineParams::make(2, 6, 3, 0, 1);
const SpineParams kNeighbourhood = SpineParams::make(3, 5, 2, 1, 2);
const SpineParams kInformational = SpineParams::make(2, 6, 2, 0, 2);

struct Outcome {
    std::vector<CheckReport> checks;
    std::vector<std::string> notes;
};

bool within(const CheckReport& c) { return c.passed && c.violations <= kAllowedViolations; }

struct World {
    SpineSpace space;
    GeometryCatalog catalog;
    LineGraph pi, rho;

    explicit World(const SpineParams& p)
        : space(build_spine(p)), catalog(space), pi(compute_pi(space)), rho(compute_rho(space)) {}
    const LineGraph& graph(Delta d) const { return d == Delta::pi ? pi : rho; }
};

const World& world(const SpineParams& p) {
    static std::map<std::string, std::unique_ptr<World>> cache;
    const auto key = std::to_string(p.field.q) + "," + std::to_string(p.field.n) + "," + std::to_string(p.k) + "," +
                     std::to_string(p.m) + "," + std::to_string(p.w);
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<World>(p);
    return *slot;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CheckReport budget(const std::string& name, double elapsed, double limit) {
    std::ostringstream w;
    w << elapsed << " s against " << limit << " s";
    return {name, elapsed <= limit, 1, elapsed <= limit ? 0U : 1U, w.str()};
}

CheckReport gate(const std::string& name, bool holds) { return {name, holds, 1, holds ? 0U : 1U, {}}; }

std::string tag(Delta d) { return std::string(to_string(d)); }

Outcome clique_classification() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto& w = world(kSmallBundle);
    for (Delta d : {Delta::pi, Delta::rho})
        o.checks.push_back(check_clique_classification(w.catalog, w.graph(d), bron_kerbosch(w.graph(d))));
    o.checks.push_back(budget("runtime", seconds_since(t0), kCliqueBudgetSeconds));
    return o;
}

Outcome exchange() {
    Outcome o;
    const auto& w = world(kSmallBundle);
    o.checks.push_back(check_exchange(w.catalog, w.rho, bron_kerbosch(w.rho)));
    return o;
}

Outcome ternary() {
    Outcome o;
    const auto g = validate_params(kPencilGate);
    o.checks.push_back(gate("pencil-gate", g.pencil_gate));
    if (!g.pencil_gate) return o;
    const auto& w = world(kPencilGate);
    const TripleSweep sweep{kExhaustiveTripleLimit, kTripleSamples, kSampleSeed};
    for (Delta d : {Delta::pi, Delta::rho})
        o.checks.push_back(check_ternary_pencils(w.catalog, w.graph(d), bron_kerbosch(w.graph(d)), sweep));
    return o;
}

Outcome pencil_space() {
    Outcome o;
    const auto g = validate_params(kPencilGate);
    o.checks.push_back(gate("pencil-gate", g.pencil_gate));
    if (!g.pencil_gate) return o;
    const auto& w = world(kPencilGate);
    for (Delta d : {Delta::pi, Delta::rho}) {
        const auto st = strip(w.graph(d), kStripSeed);
        const auto run = run_abstract(st.graph, {false});
        o.checks.push_back(check_pencil_family(w.catalog, run, st.perm));
        o.notes.push_back(tag(d) + ": " + std::to_string(run.pencils.size()) + " pencils found, " +
                          std::to_string(pencil_family(w.catalog, true).size()) + " proper pencils in the geometry");
    }
    return o;
}

Outcome reconstruction() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto& w = world(kSmallBundle);
    const auto& p = kSmallBundle;
    const auto counts = oracle::spine_counts(p.field.q, p.field.n, p.k, p.m, p.w);
    o.checks.push_back({"point-count-oracle", counts.points == kSmallBundlePoints && w.space.points().size() == counts.points,
                        1, counts.points == w.space.points().size() ? 0U : 1U,
                        std::to_string(counts.points) + " oracle points, " +
                            std::to_string(w.space.points().size()) + " built"});
    for (Delta d : {Delta::pi, Delta::rho}) {
        const auto st = strip(w.graph(d), kStripSeed);
        const auto run = run_abstract(st.graph);
        const auto eq = verify_equivalence(w.space, run.b, run.recon, st.perm);
        for (auto c : to_checks(eq)) {
            c.name += "-" + tag(d);
            o.checks.push_back(std::move(c));
        }
        auto ls = run.recon.space.check_linear_space();
        ls.name += "-" + tag(d);
        o.checks.push_back(std::move(ls));
        o.notes.push_back(tag(d) + ": |B| = " + std::to_string(run.b.size()) + ", " +
                          std::to_string(eq.reconstructed_points) + " reconstructed points");
    }
    o.checks.push_back(budget("runtime", seconds_since(t0), kReconstructionBudgetSeconds));
    return o;
}

Outcome upsilon_structure() {
    Outcome o;
    const auto& w = world(kSmallBundle);
    for (Delta d : {Delta::pi, Delta::rho}) {
        const auto st = strip(w.graph(d), kStripSeed);
        const auto run = run_abstract(st.graph);
        std::vector<Clique> b_lines;
        for (const auto& c : run.b) b_lines.push_back(c.lines);
        const auto b_source = map_cliques(b_lines, invert_permutation(st.perm));
        const CliqueClassifier cls(w.catalog, d);
        o.checks.push_back(
            to_check("upsilon-geometry-" + tag(d), check_upsilon_geometry(w.space, cls, b_source, w.graph(d))));
        o.checks.push_back(to_check("upsilon-transitivity-" + tag(d), run.recon.classes));
        o.notes.push_back(tag(d) + ": " + std::to_string(run.recon.classes.related_pairs) + " related pairs, " +
                          std::to_string(run.recon.classes.class_count) + " classes");
    }
    return o;
}

Outcome counterexample() {
    Outcome o;
    const auto& w = world(kNeighbourhood);
    const auto f = build_homology_map(w.space, 2);
    const auto rep = verify_counterexample(w.space, f, w.pi, w.rho);
    for (auto& c : to_checks(rep)) o.checks.push_back(std::move(c));
    o.checks.push_back(check_neighbourhood_structure(w.space));
    if (rep.witness_found) {
        const auto& l = w.space.lines()[rep.line];
        o.notes.push_back("witness U=" + w.space.points()[rep.u].digits() + " U'=" +
                          w.space.points()[rep.u_prime].digits() + " L=(" + l.h.digits() + "," + l.b.digits() + ")");
    }
    return o;
}

Outcome foundations() {
    Outcome o;
    for (const auto* p : {&kSmallBundle, &kPencilGate}) {
        const auto& w = world(*p);
        const auto suffix = "-k" + std::to_string(p->k);
        auto f = check_fact_intersections(w.space);
        f.name += suffix;
        o.checks.push_back(std::move(f));
        auto t = check_tripod_span(w.space);
        t.name += suffix;
        o.checks.push_back(std::move(t));
    }
    const int qs[] = {2, 3};
    o.checks.push_back(check_gaussian_binomials(qs, 6));
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome determinism() {
    Outcome o;
    const auto root = fs::temp_directory_path() / "spine-acceptance-determinism";
    fs::remove_all(root);
    spinectl::RunConfig c;
    c.q = kSmallBundle.field.q;
    c.n = kSmallBundle.field.n;
    c.k = kSmallBundle.k;
    c.m = kSmallBundle.m;
    c.w = kSmallBundle.w;
    c.seed = kStripSeed;
    std::ostringstream sink;
    std::string reports[2];
    for (int i = 0; i < 2; ++i) {
        c.output = root / ("run" + std::to_string(i));
        spinectl::run_command("verify-all", c, sink);
        reports[i] = slurp(c.output / "verify-all.json");
    }
    const bool same = !reports[0].empty() && reports[0] == reports[1];
    o.checks.push_back({"verify-all-bytes", same, 2, same ? 0U : 1U,
                        std::to_string(reports[0].size()) + " and " + std::to_string(reports[1].size()) + " bytes"});
    return o;
}

Outcome informational() {
    Outcome o;
    const auto& w = world(kInformational);
    for (Delta d : {Delta::pi, Delta::rho}) {
        const auto st = strip(w.graph(d), kStripSeed);
        const auto run = run_abstract(st.graph);
        for (auto c : to_checks(verify_equivalence(w.space, run.b, run.recon, st.perm))) {
            c.name += "-" + tag(d);
            o.checks.push_back(std::move(c));
        }
    }
    o.notes.push_back(std::to_string(w.space.points().size()) + " points");
    return o;
}

struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "clique-classification", clique_classification},
        {2, "exchange-criterion", exchange},
        {3, "ternary-pencils", ternary},
        {4, "pencil-space-definability", pencil_space},
        {5, "bundle-reconstruction", reconstruction},
        {6, "upsilon-structure", upsilon_structure},
        {7, "neighbourhood-counterexample", counterexample},
        {8, "foundational-checks", foundations},
        {9, "determinism", determinism},
        {0, "informational-m0-reconstruction", informational},
    };
    return all;
}

bool report(const Criterion& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto o = c.run();
    const bool ok = std::all_of(o.checks.begin(), o.checks.end(), within);
    std::ostringstream head;
    head << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " (" << o.checks.size()
         << " checks, tolerance " << kAllowedViolations << ", " << std::fixed << std::setprecision(1)
         << seconds_since(t0) << " s)";
    std::cout << head.str() << '\n';
    for (const auto& k : o.checks) {
        std::cout << "    " << (within(k) ? "ok  " : "bad ") << k.name << ": " << k.checked << " checked, "
                  << k.violations << " violations";
        if (!within(k) && !k.witness.empty()) std::cout << "; " << k.witness;
        std::cout << '\n';
    }
    for (const auto& n : o.notes) std::cout << "    note " << n << '\n';
    std::cout.flush();
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> wanted;
    app.add_option("--criterion", wanted, "criterion ids to run (0 is informational); default all 1-9");
    CLI11_PARSE(app, argc, argv);
    if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8, 9};

    bool ok = true;
    for (int id : wanted) {
        const auto it = std::find_if(criteria().begin(), criteria().end(), [&](const Criterion& c) { return c.id == id; });
        if (it == criteria().end()) {
            std::cerr << "unknown criterion " << id << '\n';
            return 2;
        }
        ok = report(*it) && ok;
    }
    return ok ? 0 : 1;
}
