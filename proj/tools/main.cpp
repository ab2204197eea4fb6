#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nervecheck/cli.hpp"
#include "nervecheck/io.hpp"

int main(int argc, char** argv)
{
    CLI::App app{
        "nervecheck: nerve, Mayer-Vietoris, and homological nerve-theorem "
        "checks on finite simplicial complexes"};
    app.require_subcommand(1);

    std::string path;
    std::string coeff_text = "z";
    std::string r_text;
    std::string mode = "theorem";
    std::optional<int> k;
    std::optional<int> max_dim;
    bool reduced = false;
    bool trace = false;

    CLI::App* homology = app.add_subcommand("homology", "Homology of a complex file");
    homology->add_option("file", path, "complex document")->required();
    homology->add_option("--coeff", coeff_text, "z, q, or p:<prime>");
    homology->add_flag("--reduced", reduced, "reduce degree 0 against the augmentation");

    CLI::App* nerve = app.add_subcommand("nerve", "Nerve of a cover file, as a complex document");
    nerve->add_option("file", path, "cover document")->required();
    nerve->add_option("--max-dim", max_dim, "truncate the nerve at this dimension");

    CLI::App* rips = app.add_subcommand(
        "rips", "Vietoris-Rips complex of a points file (strict diameter < r)");
    rips->add_option("file", path, "points document")->required();
    rips->add_option("--r", r_text, "scale, as an exact rational (3/2, 1.5, 2)")->required();
    rips->add_option("--max-dim", max_dim, "largest simplex dimension (default: all)");
    rips->add_option("--coeff", coeff_text, "z, q, or p:<prime>");

    CLI::App* check = app.add_subcommand("check", "Verify a property of a cover file");
    check->add_option("file", path, "cover document")->required();
    CLI::Option* coeff_opt =
        check->add_option("--coeff", coeff_text, "z, q, or p:<prime> (mode-dependent)");
    check->add_option("--mode", mode, "theorem | prop1 | collapse | dowker | gmap");
    check->add_option("--k", k, "theorem level / gmap top degree");
    check->add_option("--max-dim", max_dim, "dowker: truncate both complexes");
    check->add_flag("--trace", trace, "theorem: include the proof-step trace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : nervecheck::cli::exit_input;
    }

    nervecheck::CoefficientSpec coeff;
    try {
        coeff = nervecheck::cli::parse_coeff(coeff_text);
    } catch (const nervecheck::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return nervecheck::cli::exit_input;
    }

    if (homology->parsed())
        return nervecheck::cli::cmd_homology(path, coeff, reduced, std::cout, std::cerr);
    if (nerve->parsed())
        return nervecheck::cli::cmd_nerve(path, max_dim, std::cout, std::cerr);
    if (rips->parsed())
        return nervecheck::cli::cmd_rips(path, r_text, max_dim, coeff, std::cout, std::cerr);

    nervecheck::cli::CheckOptions options;
    options.mode = mode;
    options.k = k;
    options.coeff = coeff;
    options.coeff_given = coeff_opt->count() > 0;
    options.trace = trace;
    options.max_dim = max_dim;
    return nervecheck::cli::cmd_check(path, options, std::cout, std::cerr);
}
