#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <punctured/cli.hpp>

namespace
{

using punctured::ComplexValue;
using punctured::PunctureIndex;
namespace cli = punctured::cli;

// A bare `--n` arrives as one empty string and means "no indices".
std::vector<PunctureIndex> to_indices(const std::vector<std::string> &values)
{
    std::vector<PunctureIndex> out;
    for (const std::string &text : values) {
        if (text.empty()) {
            continue;
        }
        int v = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || end != text.data() + text.size()) {
            throw punctured::DomainError("--n: not an integer: '" + text + "'");
        }
        out.emplace_back(v);
    }
    return out;
}

PunctureIndex single_index(const std::vector<std::string> &values)
{
    const std::vector<PunctureIndex> indices = to_indices(values);
    if (indices.size() > 1) {
        throw punctured::DomainError("this command takes a single --n");
    }
    return indices.empty() ? PunctureIndex(2) : indices.front();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Hyperbolic metric of the plane punctured at the n-th roots of unity, and the related "
                 "Landau, Schottky and Schwarz bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::vector<std::string> n_values;
    std::string format = "text";
    double tol = 1e-6;
    std::string out_path;
    CLI::Option *n_option = app.add_option("--n", n_values, "puncture count(s), comma separated")
                                ->delimiter(',')
                                ->expected(0, CLI::detail::expected_max_vector_size);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--tol", tol, "display tolerance; sets significant digits of text output");
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    auto *constants = app.add_subcommand("constants", "table of gamma_n, K2, K3, R_n, Schwarz factor, |f_n'(0)|, lambda(0)");

    auto *density = app.add_subcommand("density", "hyperbolic density at a point");
    double re = 0.0;
    double im = 0.0;
    bool with_bound = false;
    density->add_option("--re", re, "real part of z");
    density->add_option("--im", im, "imaginary part of z");
    density->add_flag("--lower-bound", with_bound, "also print the sharp lower bound and the ratio");

    auto *bound = app.add_subcommand("bound", "Landau, Schottky, Schwarz and Hempel bounds");
    bound->require_subcommand(1);
    double a0_re = 0.0;
    double a0_im = 0.0;
    double abs_f0 = 1.0;
    double abs_z = 0.0;
    auto add_a0 = [&](CLI::App *sub) {
        sub->add_option("--a0-re", a0_re, "real part of a0 = f(0)");
        sub->add_option("--a0-im", a0_im, "imaginary part of a0");
    };
    auto *landau = bound->add_subcommand("landau", "sharp bound for |f'(0)| given f(0) = a0");
    add_a0(landau);
    auto *schottky = bound->add_subcommand("schottky", "bound for log|f(z)| given |f(0)|");
    schottky->add_option("--f0", abs_f0, "|f(0)|")->required();
    schottky->add_option("--z", abs_z, "|z| in [0, 1)")->required();
    auto *schwarz = bound->add_subcommand("schwarz", "bound for |f(z)| when f(0) = 0, |z| < R_n");
    schwarz->add_option("--z", abs_z, "|z|")->required();
    auto *hempel = bound->add_subcommand("hempel", "Hempel's bound for functions omitting {1, -1}");
    add_a0(hempel);
    auto *compare = bound->add_subcommand("compare", "Landau (n = 2) against Hempel at a0");
    add_a0(compare);

    auto *grid = app.add_subcommand("grid", "CSV grid x,y,value for plotting");
    cli::GridSpec spec;
    std::string quantity = "density";
    grid->add_option("--quantity", quantity, "density | lower-bound | density-ratio | bound-winner");
    grid->add_option("--x-min", spec.x_min);
    grid->add_option("--x-max", spec.x_max);
    grid->add_option("--y-min", spec.y_min);
    grid->add_option("--y-max", spec.y_max);
    grid->add_option("--nx", spec.nx);
    grid->add_option("--ny", spec.ny);

    auto *verify = app.add_subcommand("verify", "compare the main pipeline with independent oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        cli::OutputOptions options;
        options.format = format == "csv" ? cli::Format::csv : format == "json" ? cli::Format::json : cli::Format::text;
        options.digits = cli::digits_for_tolerance(tol);

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                throw std::runtime_error("cannot open output file '" + out_path + "'");
            }
        }
        std::ostream &out = out_path.empty() ? std::cout : file;
        const ComplexValue a0(a0_re, a0_im);

        int code = 0;
        if (*constants) {
            code = cli::cmd_constants(to_indices(n_values), options, out);
        } else if (*density) {
            code = cli::cmd_density(single_index(n_values), {re, im}, with_bound, options, out, std::cerr);
        } else if (*landau) {
            code = cli::cmd_bound_landau(single_index(n_values), a0, options, out, std::cerr);
        } else if (*schottky) {
            code = cli::cmd_bound_schottky(single_index(n_values), abs_f0, abs_z, options, out);
        } else if (*schwarz) {
            code = cli::cmd_bound_schwarz(single_index(n_values), abs_z, options, out);
        } else if (*hempel) {
            code = cli::cmd_bound_hempel(a0, options, out, std::cerr);
        } else if (*compare) {
            code = cli::cmd_bound_compare(a0, options, out);
        } else if (*grid) {
            spec.quantity = cli::parse_quantity(quantity);
            code = cli::cmd_grid(spec, single_index(n_values), out);
        } else if (*verify) {
            const std::vector<PunctureIndex> defaults = {PunctureIndex(2), PunctureIndex(3), PunctureIndex(5),
                                                         PunctureIndex(10)};
            code = cli::cmd_verify(n_option->count() > 0 ? to_indices(n_values) : defaults, options, out);
        }
        out.flush();
        if (!out) {
            throw std::runtime_error("write failed");
        }
        return code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
