#ifndef PUNCTURED_CLI_HPP
#define PUNCTURED_CLI_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "types.hpp"
#include "verify.hpp"

// Command implementations behind the `punctured` tool. Each writes to the
// given streams and returns a process exit code; argument parsing lives in
// tools/punctured.cpp.

namespace punctured::cli
{

enum class Format { text, csv, json };

enum class Quantity { density, lower_bound, density_ratio, bound_winner };

struct GridSpec {
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;
    std::int64_t nx = 1;
    std::int64_t ny = 1;
    Quantity quantity = Quantity::density;
};

struct OutputOptions {
    Format format = Format::text;
    int digits = 6; // significant digits in text output
};

inline constexpr std::int64_t max_grid_cells = 100000000;
inline constexpr const char *inf_flagged = "inf-flagged";

/// 17 significant digits, scientific, independent of the C locale.
inline std::string format_csv(double value)
{
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::scientific, 16);
    return std::string(buffer, result.ptr);
}

inline std::string format_text(double value, int digits)
{
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, std::clamp(digits, 1, 17));
    return std::string(buffer, result.ptr);
}

/// Number of significant digits that resolves a relative tolerance.
inline int digits_for_tolerance(double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("--tol must be positive and finite");
    }
    return std::clamp(static_cast<int>(std::ceil(-std::log10(tol))), 1, 17);
}

inline Quantity parse_quantity(const std::string &name)
{
    if (name == "density") {
        return Quantity::density;
    }
    if (name == "lower-bound") {
        return Quantity::lower_bound;
    }
    if (name == "density-ratio") {
        return Quantity::density_ratio;
    }
    if (name == "bound-winner") {
        return Quantity::bound_winner;
    }
    throw DomainError("unknown grid quantity '" + name +
                      "' (expected density, lower-bound, density-ratio or bound-winner)");
}

namespace detail
{

// A small table writer: aligned text, CSV or a JSON array of objects.
class Table
{
public:
    Table(std::vector<std::string> columns, OutputOptions options)
        : columns_(std::move(columns)), options_(options)
    {
    }

    void add(std::vector<double> row) { rows_.push_back(std::move(row)); }

    void write(std::ostream &out) const
    {
        switch (options_.format) {
        case Format::json: {
            nlohmann::ordered_json array = nlohmann::ordered_json::array();
            for (const auto &row : rows_) {
                nlohmann::ordered_json object;
                for (std::size_t i = 0; i < columns_.size(); ++i) {
                    object[columns_[i]] = row[i];
                }
                array.push_back(object);
            }
            out << array.dump() << '\n';
            return;
        }
        case Format::csv:
            write_delimited(out);
            return;
        case Format::text:
            write_aligned(out);
            return;
        }
    }

private:
    std::string cell(double v) const
    {
        return options_.format == Format::csv ? format_csv(v) : format_text(v, options_.digits);
    }

    void write_delimited(std::ostream &out) const
    {
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            out << (i ? "," : "") << columns_[i];
        }
        out << '\n';
        for (const auto &row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << cell(row[i]);
            }
            out << '\n';
        }
    }

    void write_aligned(std::ostream &out) const
    {
        std::vector<std::size_t> width(columns_.size());
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            width[i] = columns_[i].size();
            for (const auto &row : rows_) {
                width[i] = std::max(width[i], cell(row[i]).size());
            }
        }
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << columns_[i];
        }
        out << '\n';
        for (const auto &row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cell(row[i]);
            }
            out << '\n';
        }
    }

    std::vector<std::string> columns_;
    OutputOptions options_;
    std::vector<std::vector<double>> rows_;
};

inline void write_scalars(std::ostream &out, const OutputOptions &options,
                          const std::vector<std::pair<std::string, double>> &fields)
{
    std::vector<std::string> names;
    std::vector<double> values;
    for (const auto &[name, value] : fields) {
        names.push_back(name);
        values.push_back(value);
    }
    Table table(names, options);
    table.add(values);
    table.write(out);
}

inline bool is_root_of_unity(PunctureIndex n, ComplexValue z)
{
    return punctured::detail::distance_to_roots(n, z) <= punctured::detail::puncture_tolerance;
}

inline double node(double lo, double hi, std::int64_t i, std::int64_t count)
{
    if (count == 1) {
        return 0.5 * (lo + hi);
    }
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

inline nlohmann::ordered_json json_value(ComplexValue v, bool complex_valued)
{
    if (!complex_valued) {
        return v.real();
    }
    return nlohmann::ordered_json{{"re", v.real()}, {"im", v.imag()}};
}

inline nlohmann::ordered_json json_number(double v)
{
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(format_csv(v));
}

} // namespace detail

/// One JSON line per oracle report.
inline std::string to_json_line(const verify::OracleReport &r)
{
    nlohmann::ordered_json j;
    j["quantity"] = r.quantity;
    j["main_value"] = detail::json_value(r.main_value, r.complex_valued);
    j["oracle_value"] = detail::json_value(r.oracle_value, r.complex_valued);
    j["relative_error"] = detail::json_number(r.relative_error);
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    return j.dump();
}

inline int cmd_constants(const std::vector<PunctureIndex> &ns, const OutputOptions &options, std::ostream &out)
{
    detail::Table table({"n", "gamma_n", "k2", "k3", "r_n", "schwarz_factor", "covering_derivative", "lambda_at_zero"},
                        options);
    for (const PunctureIndex n : ns) {
        const RootConstants &rc = root_constants(n);
        table.add({n.as_double(), rc.gamma_n, rc.k2, rc.k3, rc.r_n, rc.schwarz_factor, rc.covering_derivative,
                   rc.lambda_at_zero});
    }
    table.write(out);
    return 0;
}

inline int cmd_density(PunctureIndex n, ComplexValue z, bool with_lower_bound, const OutputOptions &options,
                       std::ostream &out, std::ostream &err)
{
    const DensityValue d = lambda_punctured(n, z);
    if (d.near_puncture) {
        err << "warning: point is within 1e-3 of a puncture; accuracy is degraded\n";
    }
    std::vector<std::pair<std::string, double>> fields = {{"density", d.value},
                                                          {"equality_locus", d.at_equality_locus ? 1.0 : 0.0}};
    if (with_lower_bound) {
        const double bound = lower_bound(n, z);
        fields.emplace_back("lower_bound", bound);
        fields.emplace_back("ratio", d.value / bound);
    }
    detail::write_scalars(out, options, fields);
    return 0;
}

inline int cmd_bound_landau(PunctureIndex n, ComplexValue a0, const OutputOptions &options, std::ostream &out,
                            std::ostream &err)
{
    if (detail::is_root_of_unity(n, a0)) {
        err << "warning: a0 is an n-th root of unity; no admissible function has f(0) = a0\n";
    }
    detail::write_scalars(out, options, {{"landau_bound", landau_bound(n, a0)}});
    return 0;
}

inline int cmd_bound_schottky(PunctureIndex n, double abs_f0, double abs_z, const OutputOptions &options,
                              std::ostream &out)
{
    detail::write_scalars(out, options, {{"schottky_bound", schottky_bound(n, abs_f0, abs_z)}});
    return 0;
}

inline int cmd_bound_schwarz(PunctureIndex n, double abs_z, const OutputOptions &options, std::ostream &out)
{
    detail::write_scalars(out, options, {{"schwarz_bound", schwarz_bound(n, abs_z)}});
    return 0;
}

inline int cmd_bound_hempel(ComplexValue a0, const OutputOptions &options, std::ostream &out, std::ostream &err)
{
    const HempelBound h = hempel_landau_bound(a0);
    if (h.degenerate) {
        err << "warning: a0 = -1, Hempel's bound degenerates to 0\n";
    }
    detail::write_scalars(out, options, {{"hempel_bound", h.value}, {"degenerate", h.degenerate ? 1.0 : 0.0}});
    return 0;
}

inline int cmd_bound_compare(ComplexValue a0, const OutputOptions &options, std::ostream &out)
{
    const BoundComparison c = compare_bounds(a0);
    if (options.format == Format::json) {
        nlohmann::ordered_json j;
        j["a0"] = {{"re", a0.real()}, {"im", a0.imag()}};
        j["landau_bound"] = c.landau_bound;
        j["hempel_bound"] = c.hempel_bound ? nlohmann::ordered_json(*c.hempel_bound) : nlohmann::ordered_json();
        j["winner"] = to_string(c.winner);
        out << j.dump() << '\n';
        return 0;
    }
    const std::string hempel = c.hempel_bound ? (options.format == Format::csv ? format_csv(*c.hempel_bound)
                                                                               : format_text(*c.hempel_bound, options.digits))
                                              : "undefined";
    const std::string landau =
        options.format == Format::csv ? format_csv(c.landau_bound) : format_text(c.landau_bound, options.digits);
    if (options.format == Format::csv) {
        out << "landau_bound,hempel_bound,winner\n" << landau << ',' << hempel << ',' << to_string(c.winner) << '\n';
    } else {
        out << "landau_bound  " << landau << "\nhempel_bound  " << hempel << "\nwinner        " << to_string(c.winner)
            << '\n';
    }
    return 0;
}

inline void validate(const GridSpec &spec)
{
    if (!(spec.x_min < spec.x_max) || !(spec.y_min < spec.y_max)) {
        throw DomainError("grid: require x_min < x_max and y_min < y_max");
    }
    if (spec.nx < 1 || spec.ny < 1) {
        throw DomainError("grid: nx and ny must be positive");
    }
    if (spec.nx > max_grid_cells / spec.ny) {
        throw DomainError("grid: nx * ny exceeds 1e8 cells");
    }
}

/// CSV grid x,y,value over node points (both endpoints included; a single
/// node sits at the midpoint). Rows run with y outer and x inner, both
/// ascending. BOUND_WINNER uses n = 2 and emits +1 (Landau), 0 (tie) or
/// -1 (Hempel).
inline int cmd_grid(const GridSpec &spec, PunctureIndex n, std::ostream &out)
{
    validate(spec);
    out << "x,y,value\n";
    for (std::int64_t j = 0; j < spec.ny; ++j) {
        const double y = detail::node(spec.y_min, spec.y_max, j, spec.ny);
        for (std::int64_t i = 0; i < spec.nx; ++i) {
            const double x = detail::node(spec.x_min, spec.x_max, i, spec.nx);
            const ComplexValue z(x, y);
            out << format_csv(x) << ',' << format_csv(y) << ',';
            const bool density_based = spec.quantity == Quantity::density || spec.quantity == Quantity::density_ratio;
            if (density_based &&
                punctured::detail::distance_to_roots(n, z) < punctured::detail::near_puncture_distance) {
                out << inf_flagged << '\n';
                continue;
            }
            switch (spec.quantity) {
            case Quantity::density:
                out << format_csv(lambda_punctured(n, z).value);
                break;
            case Quantity::lower_bound:
                out << format_csv(lower_bound(n, z));
                break;
            case Quantity::density_ratio:
                out << format_csv(lambda_punctured(n, z).value / lower_bound(n, z));
                break;
            case Quantity::bound_winner: {
                const Winner w = compare_bounds(z).winner;
                out << (w == Winner::landau_sharper ? "1" : w == Winner::hempel_sharper ? "-1" : "0");
                break;
            }
            }
            out << '\n';
        }
    }
    return 0;
}

/// Runs the oracle suite; exit code 0 iff every entry passes.
inline int cmd_verify(const std::vector<PunctureIndex> &ns, const OutputOptions &options, std::ostream &out)
{
    const std::vector<verify::OracleReport> reports = verify::run_oracle_suite(ns);
    bool all_pass = true;
    for (const auto &r : reports) {
        all_pass = all_pass && r.pass;
        if (options.format == Format::text) {
            out << (r.pass ? "PASS  " : "FAIL  ") << r.quantity << "  rel_err=" << format_text(r.relative_error, 3)
                << "  tol=" << format_text(r.tolerance, 3) << '\n';
        } else {
            out << to_json_line(r) << '\n';
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace punctured::cli

#endif
