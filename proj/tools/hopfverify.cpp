// Command-line runner for the verification suites, plus exporters for the
// computed objects (structure tensor, universal R-matrix, quantum group
// relation table, canonical DSL form of an algebra).
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <hopfv/suites.hpp>

namespace {

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) hopfv::fail(hopfv::errc::usage_error, "cannot write '" + path + "'");
    fn(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic verifier for a null-plane quantum Poincare algebra"};
    hopfv::SuiteConfig cfg;
    std::string tensor_path, rmatrix_path, frt_path, dump_path;

    app.add_option("--suite", cfg.suites,
                   "suites to run, repeatable or comma-separated (default: all)")
        ->delimiter(',')
        ->check(CLI::IsMember(hopfv::suite_names()));
    auto* order_opt =
        app.add_option("--order", cfg.order,
                       "z-order cap for every suite (default: per-suite pinned orders)")
            ->check(CLI::NonNegativeNumber);
    auto* degree_opt =
        app.add_option("--degree", cfg.degree,
                       "word-degree bound: dual-basis degree for the duality suite, compared "
                       "degree for degree-graded algebras (default: per-suite)")
            ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for the sampled monomial checks");
    app.add_option("--algebra", cfg.algebra,
                   "presentation for the jacobi/hopf suites: builtin name (uzp31, uzg, funzg, "
                   "funzg-grouplike, uzp31-classical) or DSL file path");
    app.add_option("--jobs", cfg.jobs, "maximum number of suites run concurrently")
        ->check(CLI::Range(1, 64));
    app.add_option("--export-structure-tensor", tensor_path,
                   "write the coproduct structure tensor as sorted sparse triplets ('-' for "
                   "stdout)");
    app.add_option("--export-rmatrix", rmatrix_path,
                   "write the expanded universal R-matrix and its factors");
    app.add_option("--export-frt", frt_path,
                   "write the quantum group relation table as re-ingestible DSL text");
    app.add_option("--dump-algebra", dump_path,
                   "serialize the --algebra presentation as canonical DSL text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.order_explicit = order_opt->count() > 0;
    cfg.degree_explicit = degree_opt->count() > 0;

    auto at = [&](int dflt) { return cfg.order_explicit ? cfg.order : dflt; };
    auto dat = [&](int dflt) { return cfg.degree_explicit ? cfg.degree : dflt; };

    try {
        // Resolve --algebra up front so a bad name or malformed file is a
        // usage error, not a failed check.
        hopfv::LoadedAlgebra loaded = hopfv::load_algebra(cfg, at(6));

        if (!dump_path.empty())
            with_output(dump_path, [&](std::ostream& os) {
                os << hopfv::serialize_presentation(loaded.pres);
            });
        if (!rmatrix_path.empty())
            with_output(rmatrix_path, [&](std::ostream& os) {
                hopfv::UniversalR R = hopfv::build_universal_R(at(6));
                hopfv::export_rmatrix(R, os);
            });
        if (!tensor_path.empty())
            with_output(tensor_path, [&](std::ostream& os) {
                hopfv::DualityContext ctx(at(5), dat(5));
                ctx.export_tensor(os);
            });
        if (!frt_path.empty())
            with_output(frt_path, [&](std::ostream& os) {
                os << hopfv::serialize_presentation(hopfv::build_quantum_poincare(at(6)));
            });

        const bool exported = !(tensor_path.empty() && rmatrix_path.empty() &&
                                frt_path.empty() && dump_path.empty());
        if (exported && cfg.suites.empty()) return 0;

        hopfv::RunResult res = hopfv::run_suites(cfg);
        hopfv::render(res, std::cout);
        return res.pass() ? 0 : 1;
    } catch (const hopfv::algebra_error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == hopfv::errc::parse_error || e.code() == hopfv::errc::usage_error ? 2
                                                                                            : 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
