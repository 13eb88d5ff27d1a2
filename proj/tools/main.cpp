#include "lieid/runner.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    using namespace lieid;
    CLI::App app{"Exact certification of so(2n)/sp(2n) identities"};
    app.require_subcommand(1);

    RunConfig config;
    std::string algebra = "so";
    std::string format = "json";
    std::string out_path;
    auto* run_cmd = app.add_subcommand("run", "run verification suites");
    run_cmd->add_option("--algebra", algebra, "so or sp")->check(CLI::IsMember({"so", "sp"}));
    run_cmd->add_option("--n", config.n, "rank n (defining dimension 2n)")->check(CLI::PositiveNumber);
    run_cmd->add_option("--check", config.checks, "suite to run (repeatable; default all)")
        ->check(CLI::IsMember(known_checks()))
        ->take_all();
    run_cmd->add_option("--m-max", config.m_max, "largest order of the operator recursion")->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--d-check", config.d_check, "bosonic degree bound")->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    run_cmd->add_option("--cap-dim", config.cap_dim, "largest S^2(L) dimension for the projector suite");
    run_cmd->add_option("--jobs", config.jobs, "worker threads (0: hardware concurrency)");
    run_cmd->add_option("--out", out_path, "write the report here instead of stdout");
    run_cmd->add_flag("--timings", config.timings, "attach per-suite runtimes to records");

    std::string explain_id;
    auto* explain_cmd = app.add_subcommand("explain", "print the identities a suite certifies and its scope");
    explain_cmd->add_option("id", explain_id, "suite id or 'proposition'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*explain_cmd) {
        auto text = explain(explain_id);
        if (!text) {
            std::cerr << "error: unknown check id '" << explain_id << "'\n";
            return 2;
        }
        std::cout << explain_id << "\n" << *text << "\n";
        return 0;
    }

    config.eps = algebra == "so" ? Epsilon::orthogonal() : Epsilon::symplectic();
    config.format = format == "json" ? Format::json : Format::text;
    Report report;
    try {
        validate(config);
        report = run(config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string body =
        config.format == Format::json ? report_to_json(report, config).dump(2) + "\n" : report_to_text(report);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        f << body;
    }
    return exit_code(report);
}
