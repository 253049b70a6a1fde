// Command-line front end: arrangement in, equivariant Betti tables out.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "equisyz/error.hpp"
#include "equisyz/job.hpp"

namespace {

int code(equisyz::ExitCode c) { return static_cast<int>(c); }

} // namespace

int main(int argc, char** argv) {
    using namespace equisyz;

    CLI::App app{"Equivariant Hilbert series, Betti tables and regularity of subspace-arrangement "
                 "ideals, with their exterior-algebra transposes."};
    std::string input;
    std::string inline_doc;
    std::string ideal = "product";
    std::string side = "both";
    std::string format = "json";
    std::string output;
    int dim_v = 0;
    JobConfig cfg;

    auto* in_opt = app.add_option("--input", input, "arrangement JSON file");
    auto* inline_opt = app.add_option("--arrangement", inline_doc, "arrangement JSON given inline");
    in_opt->excludes(inline_opt);
    app.add_option("--max-degree", cfg.max_degree, "truncation degree D")->default_val(4);
    app.add_option("--ideal", ideal, "product | intersection")
        ->check(CLI::IsMember({"product", "intersection"}));
    app.add_option("--side", side, "symmetric | exterior | both")
        ->check(CLI::IsMember({"symmetric", "exterior", "both"}));
    app.add_option("--oracle-check", cfg.oracle_d_max, "top degree of the brute-force check (0 disables)")
        ->default_val(0);
    app.add_option("--dim-v", dim_v, "dim V used by the oracle");
    app.add_option("--format", format, "json | markdown | latex")
        ->check(CLI::IsMember({"json", "markdown", "latex"}));
    app.add_option("--output", output, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : code(ExitCode::InputError);
    }

    try {
        if (!input.empty())
            cfg.input_path = input;
        if (!inline_doc.empty())
            cfg.inline_document = inline_doc;
        if (dim_v > 0)
            cfg.dim_v = dim_v;
        cfg.ideal = parse_ideal_kind(ideal);
        cfg.side = parse_side(side);
        cfg.format = parse_format(format);
        cfg.caps = OracleCaps::from_env();

        const Report report = run_job(cfg, &std::cerr);
        const std::string text = render(report, cfg.format);
        if (output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(output);
            if (!out) {
                std::cerr << "error: cannot write " << output << '\n';
                return code(ExitCode::InputError);
            }
            out << text;
        }
        for (const auto& v : report.validations)
            if (!v.passed)
                std::cerr << "validation failed: " << v.name << (v.detail.empty() ? "" : ": " + v.detail)
                          << '\n';
        return code(report.exit_code());
    } catch (const CapExceeded& e) {
        std::cerr << "size cap: " << e.what() << '\n';
        return code(ExitCode::SizeCap);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return code(ExitCode::InputError);
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << '\n';
        return code(ExitCode::ValidationFailure);
    }
}
