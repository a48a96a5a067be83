#include "spinectl/commands.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "spine/errors.hpp"

namespace spinectl {

using nlohmann::json;
using spine::CheckReport;
using spine::Delta;

namespace {

std::string str(std::string_view v) { return std::string(v); }

std::string hex_digest(std::span<const spine::LineId> ls) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto l : ls)
        for (int b = 0; b < 4; ++b) {
            h ^= (l >> (8 * b)) & 0xFFU;
            h *= 0x100000001b3ULL;
        }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

json gate_json(const spine::GateReport& g) {
    return json{{"basic", g.basic},
                {"pencil_gate", g.pencil_gate},
                {"bundle_gate", g.bundle_gate},
                {"violations", g.violations}};
}

// Accumulates checks into a report and the summary.
class CheckLog {
public:
    explicit CheckLog(CommandResult& r) : r_(r) {
        r_.report["checks"] = json::array();
        r_.report["skipped"] = json::array();
    }

    void add(CheckReport c, const std::string& suffix = {}) {
        if (!suffix.empty()) c.name += "-" + suffix;
        ok_ = ok_ && c.passed;
        r_.report["checks"].push_back(check_json(c));
        std::string line = (c.passed ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.checked) + " checked";
        if (!c.passed) line += ", " + std::to_string(c.violations) + " violations";
        line += ")";
        if (!c.passed && !c.witness.empty()) line += ": " + c.witness;
        r_.summary.push_back(std::move(line));
    }

    void skip(const std::string& name, const std::string& reason) {
        r_.report["skipped"].push_back(json{{"name", name}, {"reason", reason}});
        r_.summary.push_back("SKIP " + name + ": " + reason);
    }

    void finish() {
        r_.report["status"] = ok_ ? "pass" : "fail";
        r_.exit_code = ok_ ? exit_ok : exit_verification;
    }

private:
    CommandResult& r_;
    bool ok_ = true;
};

CommandResult base(Session& s, const std::string& command) {
    CommandResult r;
    r.report["command"] = command;
    r.report["config"] = canonical_json(s.config());
    r.report["gate"] = gate_json(s.gate());
    return r;
}

CommandResult gate_error(CommandResult r, const std::string& what) {
    r.exit_code = exit_config;
    r.report["status"] = "error";
    r.report["error"] = what;
    r.summary.push_back("error: " + what);
    return r;
}

std::string violations_text(const spine::GateReport& g) {
    std::string s;
    for (const auto& v : g.violations) s += (s.empty() ? "" : "; ") + v;
    return s;
}

bool bk_allowed(Session& s, CheckLog& log, const std::string& name) {
    if (s.space().lines().size() <= s.config().bk_line_cap) return true;
    log.skip(name, "line count " + std::to_string(s.space().lines().size()) + " exceeds bk_line_cap");
    return false;
}

json clique_stage(Session& s, Delta d, CheckLog& log) {
    const auto tag = str(spine::to_string(d));
    const auto& run = s.abstract(d, false);
    log.add(spine::check_spanned_maximal(run.spanned), tag);
    json res{{"spanned", run.spanned.cliques.size()}, {"generating_triples", run.spanned.generating_triples}};
    if (!bk_allowed(s, log, "maximal-" + tag + "-cliques")) return res;
    const auto& bk = s.maximal_cliques(d);
    const spine::CliqueClassifier cls(s.catalog(), d);
    std::map<std::string, std::size_t> kinds;
    for (const auto& k : bk) {
        const auto* g = cls.classify(k);
        ++kinds[g ? str(spine::to_string(g->kind)) : "unclassified"];
    }
    res["maximal"] = bk.size();
    res["maximal_by_kind"] = kinds;
    log.add(spine::check_clique_classification(s.catalog(), s.relation(d), bk));
    if (d == Delta::rho) log.add(spine::check_exchange(s.catalog(), s.relation(d), bk));
    return res;
}

json pencil_stage(Session& s, Delta d, CheckLog& log) {
    const auto tag = str(spine::to_string(d));
    const auto& run = s.abstract(d, false);
    json res{{"ternary_pencils", run.ternary.pencils.size()},
             {"positive_triples", run.ternary.positive_triples},
             {"inconsistent_closures", run.ternary.inconsistent},
             {"pencils", run.pencils.size()},
             {"geometric_proper_pencils", spine::pencil_family(s.catalog(), true).size()},
             {"geometric_parallel_pencils", spine::pencil_family(s.catalog(), false).size()}};
    if (run.parallel) {
        res["parallel_pencils"] = run.parallel->parallel.size();
        res["affine_planes"] = run.parallel->affine_planes;
    }
    if (bk_allowed(s, log, "ternary-" + tag + "-pencils")) {
        spine::TripleSweep sweep{s.config().triple_limit, s.config().triple_samples, s.config().seed};
        log.add(spine::check_ternary_pencils(s.catalog(), s.relation(d), s.maximal_cliques(d), sweep));
    }
    log.add(spine::check_pencil_family(s.catalog(), run, s.stripped(d).perm));
    return res;
}

json reconstruct_stage(Session& s, Delta d, CheckLog& log) {
    const auto tag = str(spine::to_string(d));
    const auto& run = s.abstract(d, true);
    const auto& perm = s.stripped(d).perm;
    const auto inv = spine::invert_permutation(perm);
    std::vector<spine::Clique> b_lines;
    for (const auto& c : run.b) b_lines.push_back(c.lines);
    const auto b_source = spine::map_cliques(b_lines, inv);

    log.add(spine::to_check("upsilon-transitivity", run.recon.classes), tag);
    const spine::CliqueClassifier cls(s.catalog(), d);
    log.add(spine::to_check("upsilon-geometry",
                            spine::check_upsilon_geometry(s.space(), cls, b_source, s.relation(d))),
            tag);
    const auto eq = spine::verify_equivalence(s.space(), run.b, run.recon, perm);
    for (auto& c : spine::to_checks(eq)) log.add(std::move(c), tag);
    log.add(run.recon.space.check_linear_space(), tag);

    json table = json::array();
    for (std::size_t u = 0; u < eq.point_to_bundle.size(); ++u) {
        const auto p = eq.point_to_bundle[u];
        json row{{"point", u}, {"subspace", s.space().points()[u].digits()}};
        if (p >= 0) {
            row["bundle"] = p;
            row["bundle_digest"] = hex_digest(run.recon.space.points()[static_cast<std::size_t>(p)]);
        } else {
            row["bundle"] = nullptr;
        }
        table.push_back(std::move(row));
    }
    return json{{"k0", run.k0.size()},
                {"b", run.b.size()},
                {"classes", run.recon.classes.class_count},
                {"source_points", eq.source_points},
                {"reconstructed_points", eq.reconstructed_points},
                {"bijection_table", std::move(table)}};
}

json counterexample_stage(Session& s, CheckLog& log) {
    const auto& sp = s.space();
    const auto f = spine::build_homology_map(sp, s.config().lambda);
    const auto rep = spine::verify_counterexample(sp, f, s.relation(Delta::pi), s.relation(Delta::rho));
    for (auto c : spine::to_checks(rep)) log.add(std::move(c));
    log.add(spine::check_neighbourhood_structure(sp));
    json res{{"star", sp.strong()[f.star].generator.digits()},
             {"lambda", f.lambda},
             {"axis", f.axis.digits()},
             {"pairs", rep.pairs},
             {"pi_violations", rep.pi_violations},
             {"rho_violations", rep.rho_violations},
             {"moved_lines", rep.moved_lines},
             {"fixed_axis_lines", rep.fixed_axis_lines},
             {"bundle_image_is_bundle", rep.bundle_image_is_bundle}};
    if (rep.witness_found) {
        const auto& l = sp.lines()[rep.line];
        res["witness"] = json{{"U", sp.points()[rep.u].digits()},
                              {"U_prime", sp.points()[rep.u_prime].digits()},
                              {"L", json{{"h", l.h.digits()}, {"b", l.b.digits()}}},
                              {"Y", sp.strong()[rep.top].generator.digits()}};
    }
    return res;
}

json case_json(const spine::ExcludedCase& c) {
    return json{{"tag", str(spine::to_string(c.tag))}, {"expected", str(spine::to_string(c.expected))}};
}

}  // namespace

json check_json(const CheckReport& r) {
    return json{{"name", r.name},
                {"passed", r.passed},
                {"checked", r.checked},
                {"violations", r.violations},
                {"witness", r.witness}};
}

Session::Session(RunConfig c)
    : config_(std::move(c)), gate_(spine::validate_params(config_.params())),
      cache_(config_.cache, geometry_digest(config_)) {}

const spine::SpineSpace& Session::space() {
    if (!space_) space_.emplace(spine::build_spine(config_.params()));
    return *space_;
}

const spine::GeometryCatalog& Session::catalog() {
    if (!catalog_) catalog_.emplace(space());
    return *catalog_;
}

const spine::LineGraph& Session::relation(Delta d) {
    if (auto it = relations_.find(d); it != relations_.end()) return it->second;
    auto cached = cache_.load(d);
    if (cached && cached->size() == space().lines().size()) {
        ++cache_hits_;
        return relations_.emplace(d, std::move(*cached)).first->second;
    }
    auto g = spine::compute_relation(space(), d);
    cache_.store(g);
    return relations_.emplace(d, std::move(g)).first->second;
}

const spine::StrippedGraph& Session::stripped(Delta d) {
    if (auto it = stripped_.find(d); it != stripped_.end()) return it->second;
    return stripped_.emplace(d, spine::strip(relation(d), config_.seed)).first->second;
}

const std::vector<spine::Clique>& Session::maximal_cliques(Delta d) {
    if (auto it = maximal_.find(d); it != maximal_.end()) return it->second;
    return maximal_.emplace(d, spine::bron_kerbosch(relation(d))).first->second;
}

const spine::AbstractRun& Session::abstract(Delta d, bool reconstruct) {
    auto it = runs_.find(d);
    if (it == runs_.end()) it = runs_.emplace(d, spine::run_abstract(stripped(d).graph, {reconstruct})).first;
    auto& run = it->second;
    if (reconstruct && !run.recon.attempted) run.recon = spine::reconstruct(run.b, stripped(d).graph);
    return run;
}

CommandResult cmd_build(Session& s) {
    auto r = base(s, "build");
    CheckLog log(r);
    const auto& sp = s.space();
    std::map<std::string, std::size_t> by_class;
    for (const auto& l : sp.lines()) ++by_class[str(spine::to_string(l.cls))];
    json strong = json::object();
    for (const auto& x : sp.strong()) {
        auto& e = strong[str(spine::to_string(x.kind))];
        if (e.is_null()) e = json{{"count", 0}, {"p_dim", x.p_dim}, {"d_dim", x.d_dim}, {"points", x.points.size()}};
        e["count"] = e["count"].get<std::size_t>() + 1;
    }
    std::map<std::string, std::size_t> planes;
    for (const auto& p : s.catalog().planes()) ++planes[str(spine::to_string(p.kind))];
    r.report["results"] = json{{"points", sp.points().size()},
                               {"lines", sp.lines().size()},
                               {"lines_by_class", by_class},
                               {"strong", strong},
                               {"planes_by_kind", planes}};
    r.summary.push_back(std::to_string(sp.points().size()) + " points, " + std::to_string(sp.lines().size()) +
                        " lines, " + std::to_string(sp.strong().size()) + " maximal strong subspaces");
    log.add(spine::check_fact_intersections(sp));
    log.add(spine::check_tripod_span(sp));

    json pts = json::array();
    for (const auto& u : sp.points()) pts.push_back(u.digits());
    json lines = json::array();
    for (const auto& l : sp.lines())
        lines.push_back(json{{"h", l.h.digits()}, {"b", l.b.digits()}, {"class", str(spine::to_string(l.cls))},
                             {"points", l.points}});
    r.artifacts["space.json"] = json{{"config", canonical_json(s.config())}, {"points", pts}, {"lines", lines}};
    log.finish();
    return r;
}

CommandResult cmd_relations(Session& s) {
    auto r = base(s, "relations");
    CheckLog log(r);
    json res = json::object();
    for (Delta d : s.config().deltas()) {
        const auto& g = s.relation(d);
        std::size_t lo = g.size() ? g.neighbours(0).size() : 0, hi = 0;
        for (spine::LineId l = 0; l < g.size(); ++l) {
            lo = std::min(lo, g.neighbours(l).size());
            hi = std::max(hi, g.neighbours(l).size());
        }
        const auto tag = str(spine::to_string(d));
        res[tag] = json{{"lines", g.size()}, {"edges", g.edge_count()}, {"min_degree", lo}, {"max_degree", hi}};
        r.summary.push_back(tag + ": " + std::to_string(g.edge_count()) + " edges on " + std::to_string(g.size()) +
                            " lines");
        const auto& st = s.stripped(d);
        r.artifacts["relation-" + tag + ".json"] =
            json{{"kind", tag}, {"lines", g.size()}, {"rows", spine::encode_rle(st.graph)}};
        r.artifacts["relation-" + tag + ".perm.json"] = json{{"seed", s.config().seed}, {"perm", st.perm}};
    }
    if (s.config().delta == DeltaChoice::both) {
        const auto& pi = s.relation(Delta::pi);
        const auto& rho = s.relation(Delta::rho);
        CheckReport c{"rho-within-pi", true, 0, 0, {}};
        for (spine::LineId a = 0; a < rho.size(); ++a)
            for (auto b : rho.neighbours(a)) {
                ++c.checked;
                if (!pi.adjacent(a, b)) {
                    ++c.violations;
                    c.passed = false;
                    if (c.witness.empty()) c.witness = std::to_string(a) + "," + std::to_string(b);
                }
            }
        log.add(c);
    }
    r.report["results"] = res;
    log.finish();
    return r;
}

CommandResult cmd_cliques(Session& s) {
    auto r = base(s, "cliques");
    CheckLog log(r);
    json res = json::object();
    for (Delta d : s.config().deltas()) res[str(spine::to_string(d))] = clique_stage(s, d, log);
    r.report["results"] = res;
    log.finish();
    return r;
}

CommandResult cmd_pencils(Session& s) {
    auto r = base(s, "pencils");
    if (!s.gate().pencil_gate) return gate_error(std::move(r), violations_text(s.gate()));
    CheckLog log(r);
    json res = json::object();
    for (Delta d : s.config().deltas()) res[str(spine::to_string(d))] = pencil_stage(s, d, log);
    r.report["results"] = res;
    log.finish();
    return r;
}

CommandResult cmd_reconstruct(Session& s) {
    auto r = base(s, "reconstruct");
    if (!s.gate().bundle_gate) return gate_error(std::move(r), violations_text(s.gate()));
    CheckLog log(r);
    json res = json::object();
    for (Delta d : s.config().deltas()) res[str(spine::to_string(d))] = reconstruct_stage(s, d, log);
    r.report["results"] = res;
    log.finish();
    return r;
}

CommandResult cmd_counterexample(Session& s) {
    auto r = base(s, "counterexample");
    const auto c = spine::classify_case(s.config().params());
    r.report["case"] = case_json(c);
    if (c.tag != spine::CaseTag::neighbourhood)
        return gate_error(std::move(r), "counterexample needs the neighbourhood case w = k, m = k-1");
    CheckLog log(r);
    r.report["results"] = counterexample_stage(s, log);
    log.finish();
    return r;
}

CommandResult cmd_verify_all(Session& s) {
    auto r = base(s, "verify-all");
    CheckLog log(r);
    const auto& cfg = s.config();
    const int qs[] = {cfg.q};
    log.add(spine::check_gaussian_binomials(qs, std::min(cfg.n, 6)));
    const auto& sp = s.space();
    log.add(spine::check_fact_intersections(sp));
    log.add(spine::check_tripod_span(sp));
    json res = json::object();
    for (Delta d : cfg.deltas()) res["cliques"][str(spine::to_string(d))] = clique_stage(s, d, log);
    if (s.gate().pencil_gate) {
        for (Delta d : cfg.deltas()) res["pencils"][str(spine::to_string(d))] = pencil_stage(s, d, log);
    } else {
        log.skip("pencils", violations_text(s.gate()));
    }
    const auto c = spine::classify_case(cfg.params());
    r.report["case"] = case_json(c);
    if (s.gate().bundle_gate) {
        for (Delta d : cfg.deltas()) res["reconstruct"][str(spine::to_string(d))] = reconstruct_stage(s, d, log);
    } else if (c.tag == spine::CaseTag::neighbourhood && cfg.q >= 3) {
        res["counterexample"] = counterexample_stage(s, log);
    } else {
        log.skip("reconstruct", "bundle gate fails; case " + str(spine::to_string(c.tag)) + ", status " +
                                    str(spine::to_string(c.expected)));
    }
    r.report["results"] = res;
    log.finish();
    return r;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"build",       "relations",      "cliques",   "pencils",
                                                "reconstruct", "counterexample", "verify-all"};
    return names;
}

int run_command(const std::string& name, const RunConfig& c, std::ostream& out) {
    static const std::map<std::string, std::function<CommandResult(Session&)>> table{
        {"build", cmd_build},         {"relations", cmd_relations},
        {"cliques", cmd_cliques},     {"pencils", cmd_pencils},
        {"reconstruct", cmd_reconstruct}, {"counterexample", cmd_counterexample},
        {"verify-all", cmd_verify_all}};
    const auto it = table.find(name);
    if (it == table.end()) {
        out << "error: unknown command " << name << '\n';
        return exit_config;
    }
    const auto started = std::chrono::system_clock::now();
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<Session> session;
    CommandResult result;
    try {
        session.emplace(c);
    } catch (const spine::InputError& e) {
        result.report = json{{"command", name}, {"config", canonical_json(c)}};
        result = gate_error(std::move(result), e.what());
    }
    if (session && !session->gate().basic) {
        result = gate_error(base(*session, name), "invalid parameters: " + violations_text(session->gate()));
    } else if (session) {
        try {
            result = it->second(*session);
        } catch (const spine::ConfigError& e) {
            result = gate_error(base(*session, name), e.what());
        } catch (const spine::InputError& e) {
            result = gate_error(base(*session, name), e.what());
        }
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

    std::filesystem::create_directories(c.output);
    auto write = [&](const std::string& file, const json& j) {
        std::ofstream os(c.output / file);
        os << j.dump(2) << '\n';
    };
    write(name + ".json", result.report);
    for (const auto& [file, j] : result.artifacts) write(file, j);
    const auto t = std::chrono::system_clock::to_time_t(started);
    std::ostringstream stamp;
    stamp << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
    write(name + ".meta.json", json{{"started", stamp.str()},
                                    {"elapsed_ms", elapsed},
                                    {"cache_hits", session ? session->cache_hits() : 0},
                                    {"exit_code", result.exit_code}});

    for (const auto& line : result.summary) out << line << '\n';
    out << name << ": " << result.report.value("status", "error") << " (exit " << result.exit_code << ")\n";
    return result.exit_code;
}

}  // namespace spinectl
