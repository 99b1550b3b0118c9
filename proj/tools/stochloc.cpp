// stochloc: eigenvalue localization for stochastic matrices and spectral
// bounds for Randic matrices.
//
//   stochloc localize --input M.mat [--format text|json|svg] [--with-eigs]
//   stochloc compare  --input M.mat
//   stochloc plot     --input M.mat [--with-eigs] [--out plot.svg]
//   stochloc randic   --input G.edges [--with-eigs]

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "stochloc/app.hpp"

namespace {

using stochloc::app::Format;
using stochloc::app::RunConfig;
using stochloc::app::Subcommand;

struct Options {
    std::string input;
    std::string format = "text";
    std::string out;
    bool with_eigs = false;
    double row_sum_tol = stochloc::kDefaultRowSumTolerance;
    double slack = 1e-8;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--input", o.input, "input file")->required();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "svg"}));
    sub->add_flag("--with-eigs", o.with_eigs, "also compute oracle eigenvalues");
    sub->add_option("--row-sum-tol", o.row_sum_tol, "stochasticity tolerance")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--slack", o.slack, "membership and bound-check slack")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenvalue localization for stochastic and Randic matrices"};
    app.require_subcommand(1);

    Options opts;
    const std::map<std::string, Subcommand> commands = {
        {"localize", Subcommand::Localize},
        {"compare", Subcommand::Compare},
        {"plot", Subcommand::Plot},
        {"randic", Subcommand::Randic},
    };
    const std::map<std::string, std::string> help = {
        {"localize", "deflated Gershgorin regions and classic discs of a stochastic matrix"},
        {"compare", "containment of each deflated region in the classic discs"},
        {"plot", "SVG plot of the deflated regions"},
        {"randic", "Randic eigenvalue bounds of a connected graph"},
    };
    for (const auto& [name, _] : commands) add_common(app.add_subcommand(name, help.at(name)), opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : stochloc::app::kExitInput;
    }

    RunConfig cfg;
    for (const auto& [name, cmd] : commands)
        if (app.got_subcommand(name)) cfg.subcommand = cmd;
    cfg.input_path = opts.input;
    cfg.format = opts.format == "json" ? Format::Json : opts.format == "svg" ? Format::Svg : Format::Text;
    if (cfg.subcommand == Subcommand::Plot) cfg.format = Format::Svg;
    cfg.with_eigs = opts.with_eigs;
    cfg.row_sum_tol = opts.row_sum_tol;
    cfg.slack = opts.slack;

    if (opts.out.empty()) return stochloc::app::run(cfg, std::cout, std::cerr);

    std::ofstream file(opts.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file '" << opts.out << "'\n";
        return stochloc::app::kExitInput;
    }
    return stochloc::app::run(cfg, file, std::cerr);
}
