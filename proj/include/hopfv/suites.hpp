#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <semaphore>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfv/dsl.hpp"
#include "hopfv/duality.hpp"
#include "hopfv/frt.hpp"
#include "hopfv/rep.hpp"
#include "hopfv/rmatrix.hpp"

namespace hopfv {

// Runner configuration. Every suite carries its own default caps, pinned
// where its identities are exact and affordable (see plan_suites); --order
// and --degree override those defaults only when passed explicitly, which is
// what the *_explicit flags record.
struct SuiteConfig {
    std::vector<std::string> suites; // empty = all, in canonical order
    int order = 6;                   // z-order cap
    int degree = 5;                  // word-degree bound (duality, degree-graded algebras)
    bool order_explicit = false;
    bool degree_explicit = false;
    std::string format = "text"; // text | json
    std::uint64_t seed = 1;
    std::string algebra = "uzp31"; // builtin name or DSL file path
    int jobs = 1;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"jacobi", "hopf",   "subalgebra", "casimir",
                                                "duality", "phi",    "rmatrix",    "qybe",
                                                "rep",     "frt",    "poisson"};
    return names;
}

// One executed suite: the selector name, the caps it actually ran at, and the
// report. The caps are part of the output contract: every bound that affects
// a result is visible in the rendered header lines.
struct SuiteRun {
    std::string name;
    int order = 0;
    int degree = -1; // -1 when no word-degree bound applies
    Report report;
};

struct RunResult {
    SuiteConfig cfg;
    std::vector<SuiteRun> runs;
    double wall_ms = 0.0;

    bool pass() const {
        for (const auto& r : runs)
            if (!r.report.pass()) return false;
        return true;
    }
    std::size_t check_count() const {
        std::size_t n = 0;
        for (const auto& r : runs) n += r.report.checks.size();
        return n;
    }
};

inline bool is_builtin_algebra(const std::string& name) {
    return name == "uzp31" || name == "uzg" || name == "funzg" || name == "funzg-grouplike" ||
           name == "uzp31-classical";
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::usage_error, "cannot read algebra file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Resolve --algebra to a presentation for the generic jacobi/hopf suites.
// Degree-graded presentations are built with cap D + N so that every compared
// component of degree <= D is exact through z-order N (each degree-lowering
// rewrite costs at least one power of z), and compare_degree restricts the
// residual comparison to that exact window.
struct LoadedAlgebra {
    PresentationPtr pres;
    int compare_degree = -1;
};

inline LoadedAlgebra load_algebra(const SuiteConfig& cfg, int order) {
    const int D = cfg.degree_explicit ? cfg.degree : 3;
    if (is_builtin_algebra(cfg.algebra)) {
        if (cfg.algebra == "funzg") return {build_funzg(order, D + order), D};
        return {make_algebra(cfg.algebra, order, -1), -1};
    }
    const std::string text = read_text_file(cfg.algebra);
    PresentationPtr p = parse_presentation(text, order);
    if (p->grading == Grading::degree) return {parse_presentation(text, order, D + order), D};
    return {p, -1};
}

namespace detail {

struct SuitePlan {
    std::string name;
    int order = 0;
    int degree = -1;
    std::function<Report()> run;
};

inline void merge_into(Report& dst, Report&& src) {
    for (auto& c : src.checks) dst.add(std::move(c));
    dst.wall_ms += src.wall_ms;
}

// A suite must report failures, never throw past the runner: any error
// becomes a single failed check carrying the message. The runner clocks the
// whole suite itself; not every check entry point fills in Report::wall_ms.
inline Report run_guarded(const SuitePlan& plan) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    Report rep;
    try {
        rep = plan.run();
    } catch (const std::exception& e) {
        rep.suite = plan.name;
        CheckResult c;
        c.id = plan.name + ":error";
        c.pass = false;
        c.note = e.what();
        rep.add(std::move(c));
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rep;
}

} // namespace detail

inline std::vector<detail::SuitePlan> plan_suites(const SuiteConfig& cfg) {
    ReduceOptions opts;
    opts.seed = cfg.seed;
    auto at = [&](int dflt) { return cfg.order_explicit ? cfg.order : dflt; };
    auto dat = [&](int dflt) { return cfg.degree_explicit ? cfg.degree : dflt; };

    const std::vector<std::string>& wanted = cfg.suites.empty() ? suite_names() : cfg.suites;
    std::vector<detail::SuitePlan> plans;
    for (const std::string& s : wanted) {
        detail::SuitePlan pl;
        pl.name = s;
        if (s == "jacobi") {
            const int N = at(6);
            pl.order = N;
            pl.run = [cfg, N, opts] {
                LoadedAlgebra a = load_algebra(cfg, N);
                return check_jacobi(a.pres, N, opts, {}, a.compare_degree);
            };
        } else if (s == "hopf") {
            const int N = at(6);
            pl.order = N;
            pl.run = [cfg, N, opts] {
                LoadedAlgebra a = load_algebra(cfg, N);
                if (!a.pres->has_coproduct())
                    fail(errc::usage_error,
                         "presentation '" + a.pres->label + "' declares no coproduct table");
                HopfCheckConfig hc;
                hc.order = N;
                hc.seed = cfg.seed;
                hc.compare_degree = a.compare_degree;
                hc.reduce = opts;
                return check_hopf_axioms(a.pres, hc);
            };
        } else if (s == "subalgebra") {
            const int N = at(6);
            pl.order = N;
            pl.run = [N, opts] { return check_subalgebra_closure(N, opts); };
        } else if (s == "casimir") {
            const int N = at(6);
            pl.order = N;
            pl.run = [N, opts] { return check_casimir(N, opts); };
        } else if (s == "duality") {
            const int N = at(5), D = dat(5);
            const int tN = at(4), tD = dat(4);
            pl.order = N;
            pl.degree = D;
            pl.run = [=] {
                DualityContext ctx(N, D, opts);
                Report rep = ctx.run_suite();
                detail::merge_into(rep, check_t_matrix(tD, tN, opts));
                return rep;
            };
        } else if (s == "phi") {
            const int N = at(6);
            pl.order = N;
            pl.run = [N, opts] { return check_phi_morphism(N, opts); };
        } else if (s == "rmatrix") {
            const int N = at(6), iN = at(4), cN = at(2);
            pl.order = N;
            pl.run = [=] {
                Report rep = check_rmatrix(N, opts);
                detail::merge_into(rep, check_intertwining(iN, opts));
                detail::merge_into(rep, check_classical_yang_baxter(cN, opts));
                return rep;
            };
        } else if (s == "qybe") {
            const int N = at(4);
            pl.order = N;
            pl.run = [N, opts] { return check_qybe(N, opts); };
        } else if (s == "rep") {
            const int N = at(6);
            pl.order = N;
            pl.run = [N, opts] {
                Report rep = check_rep_relations(N, opts);
                detail::merge_into(rep, check_rep_rmatrix(N, opts));
                detail::merge_into(rep, check_rep_t(N, opts));
                return rep;
            };
        } else if (s == "frt") {
            const int N = at(6);
            pl.order = N;
            pl.run = [N, opts] {
                Report rep = check_frt_exchange(N, opts);
                detail::merge_into(rep, derive_frt_relations(N, opts));
                detail::merge_into(rep, check_quantum_poincare_hopf(N, opts));
                return rep;
            };
        } else if (s == "poisson") {
            const int N = at(6);
            pl.order = N;
            pl.run = [N, opts] { return check_poisson_limit(N, opts); };
        } else {
            fail(errc::usage_error, "unknown suite '" + s + "'");
        }
        plans.push_back(std::move(pl));
    }
    return plans;
}

// Executes the selected suites, up to cfg.jobs at a time. Reports are
// assembled in plan order regardless of completion order, so the output is
// identical for any jobs value.
inline RunResult run_suites(const SuiteConfig& cfg) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    std::vector<detail::SuitePlan> plans = plan_suites(cfg);

    RunResult out;
    out.cfg = cfg;
    out.runs.resize(plans.size());
    for (std::size_t i = 0; i < plans.size(); ++i) {
        out.runs[i].name = plans[i].name;
        out.runs[i].order = plans[i].order;
        out.runs[i].degree = plans[i].degree;
    }

    if (cfg.jobs <= 1) {
        for (std::size_t i = 0; i < plans.size(); ++i)
            out.runs[i].report = detail::run_guarded(plans[i]);
    } else {
        std::counting_semaphore<64> gate(std::min(cfg.jobs, 64));
        std::vector<std::future<Report>> futures;
        futures.reserve(plans.size());
        for (const auto& plan : plans)
            futures.push_back(std::async(std::launch::async, [&gate, &plan] {
                gate.acquire();
                Report rep = detail::run_guarded(plan);
                gate.release();
                return rep;
            }));
        for (std::size_t i = 0; i < plans.size(); ++i) out.runs[i].report = futures[i].get();
    }
    out.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return out;
}

inline void render_text(const RunResult& res, std::ostream& os) {
    const SuiteConfig& cfg = res.cfg;
    os << "hopf-verifier  algebra=" << cfg.algebra << "  seed=" << cfg.seed
       << "  jobs=" << cfg.jobs << "\n";
    for (const SuiteRun& run : res.runs) {
        const Report& rep = run.report;
        const std::size_t failed = rep.failed_count();
        os << (failed ? "FAIL" : "pass") << "  " << std::left << std::setw(10) << run.name
           << std::right << "  order=" << run.order;
        if (run.degree >= 0) os << "  degree=" << run.degree;
        os << "  checks=" << rep.checks.size() << "  " << std::fixed << std::setprecision(1)
           << rep.wall_ms << " ms\n";
        if (failed)
            for (const CheckResult& c : rep.checks)
                if (!c.pass) {
                    os << "      FAIL " << c.id << "  residual_terms=" << c.residual_terms
                       << "  max_z_order=" << c.residual_order;
                    if (!c.note.empty()) os << "  (" << c.note << ")";
                    os << "\n";
                }
    }
    os << (res.pass() ? "PASS" : "FAIL") << "  " << res.check_count() << " checks  "
       << std::fixed << std::setprecision(1) << res.wall_ms << " ms\n";
}

// Deterministic report: no wall times, every field always present, keys in
// fixed order. Identical config + seed must yield byte-identical output.
inline nlohmann::ordered_json to_json(const RunResult& res) {
    using json = nlohmann::ordered_json;
    const SuiteConfig& cfg = res.cfg;
    json j;
    j["schema"] = "hopf-verifier/1";
    // Only inputs that affect check outcomes appear here; --jobs and --format
    // do not, so the same configuration renders byte-identically at any
    // parallelism.
    json conf;
    conf["algebra"] = cfg.algebra;
    conf["seed"] = cfg.seed;
    conf["order"] = cfg.order_explicit ? json(cfg.order) : json(nullptr);
    conf["degree"] = cfg.degree_explicit ? json(cfg.degree) : json(nullptr);
    j["config"] = std::move(conf);
    j["pass"] = res.pass();
    json suites = json::array();
    for (const SuiteRun& run : res.runs) {
        json js;
        js["suite"] = run.name;
        js["label"] = run.report.suite;
        js["order"] = run.order;
        js["degree"] = run.degree >= 0 ? json(run.degree) : json(nullptr);
        js["pass"] = run.report.pass();
        json checks = json::array();
        for (const CheckResult& c : run.report.checks) {
            json jc;
            jc["id"] = c.id;
            jc["pass"] = c.pass;
            jc["residual_terms"] = c.residual_terms;
            jc["residual_order"] = c.residual_order;
            jc["note"] = c.note;
            checks.push_back(std::move(jc));
        }
        js["checks"] = std::move(checks);
        suites.push_back(std::move(js));
    }
    j["suites"] = std::move(suites);
    return j;
}

inline void render_json(const RunResult& res, std::ostream& os) {
    os << to_json(res).dump(2) << "\n";
}

inline void render(const RunResult& res, std::ostream& os) {
    if (res.cfg.format == "json")
        render_json(res, os);
    else
        render_text(res, os);
}

} // namespace hopfv
