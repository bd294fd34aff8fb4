// fracknot -- fractional derivatives of piecewise polynomials and sampled
// signals, plus characterization of their non-differentiable points.
//
// Exit codes: 0 success, 1 input or write error, 2 flag error,
//             3 characterize found no kinks.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracknot/characterize.hpp"
#include "fracknot/closedform.hpp"
#include "fracknot/io.hpp"
#include "fracknot/numeric.hpp"
#include "fracknot/piecewise.hpp"
#include "fracknot/reference_examples.hpp"

namespace {

namespace io = fracknot::io;
using fracknot::FracExpression;
using fracknot::FractionalOrder;
using fracknot::GridSpec;
using fracknot::IndicatorEngine;
using fracknot::PiecewiseFunction;
using fracknot::QuadSpec;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFlags = 2;
constexpr int kExitNoFindings = 3;

int fail_flags(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitFlags;
}

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitInput;
}

bool parse_grid(const std::string& text, GridSpec& grid) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos)
        return false;
    try {
        std::size_t used = 0;
        const std::string parts[3] = {text.substr(0, first),
                                      text.substr(first + 1, second - first - 1),
                                      text.substr(second + 1)};
        double values[3];
        for (int i = 0; i < 3; ++i) {
            values[i] = std::stod(parts[i], &used);
            if (used != parts[i].size()) return false;
        }
        grid = GridSpec{values[0], values[1], values[2]};
    } catch (const std::exception&) {
        return false;
    }
    return !(grid.start >= grid.stop || grid.step <= 0.0);
}

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty()) {
        std::cout << content;
        std::cout.flush();
    } else {
        io::write_file_atomic(output_path, content);
    }
}

// ----------------------------------------------------------------- deriv --

struct DerivConfig {
    std::string input;
    std::string output;
    std::string side = "both";
    std::string engine = "closed";
    std::string grid_text;
    std::string format = "csv";
    double alpha = 0.5;
    double gl_step = 1e-4;
};

// Grid-safe left derivative for the quadrature engine: the exact limit 0 at
// the anchor, a central window shrunk to stay inside [a, b] elsewhere, and an
// off-centre window at the far end.
double quad_left_on_grid(const PiecewiseFunction& f, double alpha, double x,
                         const QuadSpec& spec) {
    const double a = f.a(), b = f.b();
    if (x - a <= 1e-9 * (b - a)) return 0.0;
    auto offset = [&f, a](double xi) {
        const double lo = f.a(), hi = f.b();
        const double t = xi < lo ? lo : (xi > hi ? hi : xi);
        return f.evaluate(t) - f.evaluate(a);
    };
    auto F = [&](double y) {
        return fracknot::rl_integral(offset, 1.0 - alpha, a, y, spec, f.knots());
    };
    const double delta = std::min(spec.diff_step * (b - a), 0.45 * (x - a));
    if (x + delta <= b) return (F(x + delta) - F(x - delta)) / (2.0 * delta);
    return (F(x) - F(x - 2.0 * delta)) / (2.0 * delta);
}

double gl_left_on_grid(const PiecewiseFunction& f, double alpha, double x, double h) {
    const double a = f.a();
    if (x - a <= 1e-9 * (f.b() - a)) return 0.0;
    return fracknot::gl_derivative(f, alpha, x, std::min(h, (x - a) / 32.0));
}

std::string render_rows(const DerivConfig& cfg, const std::vector<double>& xs,
                        const std::vector<double>& fs, const std::vector<double>& dl,
                        const std::vector<double>& dr) {
    const bool left = cfg.side != "right";
    const bool right = cfg.side != "left";
    std::string out;
    if (cfg.format == "csv") {
        out = "x,f";
        if (left) out += ",dL";
        if (right) out += ",dR";
        out += "\n";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            out += io::format_number(xs[i]) + "," + io::format_number(fs[i]);
            if (left) out += "," + io::format_number(dl[i]);
            if (right) out += "," + io::format_number(dr[i]);
            out += "\n";
        }
    } else {
        out = "{\"alpha\":" + io::format_number(cfg.alpha) + ",\"engine\":\"" + cfg.engine +
              "\",\"side\":\"" + cfg.side + "\",\"rows\":[";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out += ",";
            out += "{\"x\":" + io::format_number(xs[i]) + ",\"f\":" + io::format_number(fs[i]);
            if (left) out += ",\"dL\":" + io::format_number(dl[i]);
            if (right) out += ",\"dR\":" + io::format_number(dr[i]);
            out += "}";
        }
        out += "]}\n";
    }
    return out;
}

int cmd_deriv(const DerivConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) return fail_flags("--alpha must lie in (0, 1)");
    if (cfg.side != "left" && cfg.side != "right" && cfg.side != "both")
        return fail_flags("--side must be left, right or both");
    if (cfg.engine != "closed" && cfg.engine != "gl" && cfg.engine != "quad")
        return fail_flags("--engine must be closed, gl or quad");
    if (cfg.engine == "gl" && cfg.side != "left")
        return fail_flags("engine gl is left-sided; use --side left");
    if (cfg.format != "csv" && cfg.format != "json")
        return fail_flags("--format must be csv or json");
    if (!(cfg.gl_step > 0.0)) return fail_flags("--h must be positive");
    GridSpec grid{};
    if (!parse_grid(cfg.grid_text, grid))
        return fail_flags("--grid must be start:stop:step with start < stop and step > 0");

    std::optional<PiecewiseFunction> parsed;
    try {
        parsed.emplace(io::parse_function_json(io::read_file(cfg.input)));
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    const PiecewiseFunction& f = *parsed;
    if (grid.start < f.a() || grid.stop > f.b())
        return fail_flags("--grid leaves the function domain [" + io::format_number(f.a()) +
                          ", " + io::format_number(f.b()) + "]");

    const bool want_left = cfg.side != "right";
    const bool want_right = cfg.side != "left";
    std::vector<double> xs, fs, dl, dr;
    const auto points = fracknot::sample_grid([&f](double x) { return f.evaluate(x); }, grid);
    for (const auto& [x, fx] : points) {
        xs.push_back(x);
        fs.push_back(fx);
    }
    dl.assign(xs.size(), 0.0);
    dr.assign(xs.size(), 0.0);

    if (cfg.engine == "closed") {
        const auto order = FractionalOrder::derivative(cfg.alpha);
        const FracExpression left = fracknot::jumarie_left_closed(f, order);
        const FracExpression right = fracknot::jumarie_right_closed(f, order);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (want_left) dl[i] = left.evaluate(xs[i]);
            if (want_right) dr[i] = right.evaluate(xs[i]);
        }
    } else if (cfg.engine == "quad") {
        const QuadSpec spec{};
        const PiecewiseFunction mirror = fracknot::reflected(f);
        const double s = f.a() + f.b();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (want_left) dl[i] = quad_left_on_grid(f, cfg.alpha, xs[i], spec);
            if (want_right) dr[i] = -quad_left_on_grid(mirror, cfg.alpha, s - xs[i], spec);
        }
    } else {
        for (std::size_t i = 0; i < xs.size(); ++i)
            dl[i] = gl_left_on_grid(f, cfg.alpha, xs[i], cfg.gl_step);
    }

    try {
        emit(cfg.output, render_rows(cfg, xs, fs, dl, dr));
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    return kExitOk;
}

// ----------------------------------------------------------- characterize --

struct CharacterizeConfig {
    std::string input;
    std::string output;
    std::string engine = "closed";
    std::string format = "json";
    double alpha = 0.5;
    double slope_tolerance = 1e-9;
    std::optional<double> threshold;
};

int cmd_characterize(const CharacterizeConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) return fail_flags("--alpha must lie in (0, 1)");
    if (cfg.engine != "closed" && cfg.engine != "quad")
        return fail_flags("--engine must be closed or quad for characterize");
    if (cfg.format != "json") return fail_flags("characterize reports are json only");
    if (!(cfg.slope_tolerance >= 0.0)) return fail_flags("--slope-tolerance must be >= 0");
    if (cfg.threshold && !(*cfg.threshold >= 0.0))
        return fail_flags("--threshold must be >= 0");

    fracknot::TransitionReport report;
    try {
        const auto samples = io::parse_signal_csv(io::read_file(cfg.input));
        const auto engine = cfg.engine == "closed" ? IndicatorEngine::closed_form
                                                   : IndicatorEngine::numeric;
        report = fracknot::characterize_signal(samples, cfg.alpha, cfg.threshold,
                                               cfg.slope_tolerance, engine, cfg.input);
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }

    try {
        emit(cfg.output, io::report_to_json(report) + "\n");
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    return report.findings.empty() ? kExitNoFindings : kExitOk;
}

// ------------------------------------------------------------------ paper --

struct PaperConfig {
    std::string output;  // optional directory for expressions and grid csvs
    int example = 0;     // 0 = all
};

std::string alpha_tag(double alpha) {
    std::string tag = io::format_number(alpha);
    std::replace(tag.begin(), tag.end(), '.', 'p');
    return tag;
}

std::string discrepancies_json(const std::vector<fracknot::Discrepancy>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& d = items[i];
        if (i) out += ",";
        out += "{\"example\":" + std::to_string(d.example);
        out += ",\"item\":" + nlohmann::json(d.item).dump();
        out += ",\"alpha\":" + io::format_number(d.alpha);
        out += ",\"at_x\":" + io::format_number(d.at_x);
        out += ",\"printed_form\":" + nlohmann::json(d.printed_form).dump();
        out += ",\"printed_value\":" + io::format_number(d.printed_value);
        out += ",\"verified_form\":" + nlohmann::json(d.verified_form).dump();
        out += ",\"verified_value\":" + io::format_number(d.verified_value);
        out += ",\"note\":" + nlohmann::json(d.note).dump();
        out += "}";
    }
    return out + "]";
}

int cmd_paper(const PaperConfig& cfg) {
    if (cfg.example < 0 || cfg.example > fracknot::reference_example_count())
        return fail_flags("--example must be 1..5");

    const std::vector<double> alphas{0.25, 0.5, 0.75, 0.9};
    std::vector<int> ids;
    if (cfg.example == 0) {
        for (int i = 1; i <= fracknot::reference_example_count(); ++i) ids.push_back(i);
    } else {
        ids.push_back(cfg.example);
    }

    const bool to_dir = !cfg.output.empty();
    namespace fs = std::filesystem;

    try {
        std::string summary = "{\"alphas\":[";
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            if (i) summary += ",";
            summary += io::format_number(alphas[i]);
        }
        summary += "],\"examples\":[";

        for (std::size_t e = 0; e < ids.size(); ++e) {
            const int id = ids[e];
            const PiecewiseFunction f = fracknot::reference_example(id);
            const fs::path example_dir =
                to_dir ? fs::path(cfg.output) / ("example" + std::to_string(id)) : fs::path();
            if (to_dir) {
                fs::create_directories(example_dir);
                io::write_file_atomic((example_dir / "function.json").string(),
                                      io::function_to_json(f) + "\n");
            }

            if (e) summary += ",";
            summary += "{\"example\":" + std::to_string(id);
            summary += ",\"function\":" + io::function_to_json(f);
            summary += ",\"results\":[";

            for (std::size_t a = 0; a < alphas.size(); ++a) {
                const double alpha = alphas[a];
                const auto order = FractionalOrder::derivative(alpha);
                const FracExpression left = fracknot::jumarie_left_closed(f, order);
                const FracExpression right = fracknot::jumarie_right_closed(f, order);
                const auto report = fracknot::characterize_function(
                    f, alpha, std::nullopt, IndicatorEngine::closed_form,
                    "example" + std::to_string(id));

                if (a) summary += ",";
                summary += "{\"alpha\":" + io::format_number(alpha);
                summary += ",\"left\":" + io::expression_to_json(left);
                summary += ",\"right\":" + io::expression_to_json(right);
                summary += ",\"findings\":[";
                for (std::size_t k = 0; k < report.findings.size(); ++k) {
                    const auto& finding = report.findings[k];
                    if (k) summary += ",";
                    summary += "{\"x\":" + io::format_number(finding.x);
                    summary += ",\"slope_jump\":" + io::format_number(finding.slope_jump);
                    summary += ",\"left\":" + io::format_number(finding.left_value);
                    summary += ",\"right\":" + io::format_number(finding.right_value);
                    summary += ",\"indicator\":" + io::format_number(finding.indicator);
                    summary += "}";
                }
                summary += "]}";

                if (to_dir) {
                    const GridSpec grid{f.a(), f.b(), (f.b() - f.a()) / 100.0};
                    const auto left_pts = fracknot::sample_grid(
                        [&left](double x) { return left.evaluate(x); }, grid);
                    const auto right_pts = fracknot::sample_grid(
                        [&right](double x) { return right.evaluate(x); }, grid);
                    const std::string tag = alpha_tag(alpha);
                    io::write_file_atomic(
                        (example_dir / ("left_alpha" + tag + ".json")).string(),
                        io::expression_to_json(left) + "\n");
                    io::write_file_atomic(
                        (example_dir / ("right_alpha" + tag + ".json")).string(),
                        io::expression_to_json(right) + "\n");
                    io::write_file_atomic(
                        (example_dir / ("grid_left_alpha" + tag + ".csv")).string(),
                        io::grid_to_csv(left_pts));
                    io::write_file_atomic(
                        (example_dir / ("grid_right_alpha" + tag + ".csv")).string(),
                        io::grid_to_csv(right_pts));
                }
            }
            summary += "]}";
        }

        summary += "],\"discrepancies\":" +
                   discrepancies_json(fracknot::known_discrepancies(0.5)) + "}\n";

        if (to_dir)
            io::write_file_atomic((fs::path(cfg.output) / "summary.json").string(), summary);
        std::cout << summary;
        std::cout.flush();
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional derivatives of piecewise polynomials and kink characterization"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h for the gl step flag

    DerivConfig deriv;
    auto* deriv_cmd = app.add_subcommand(
        "deriv", "evaluate left/right fractional derivatives on a grid");
    deriv_cmd->set_help_flag("--help", "print help");
    deriv_cmd->add_option("--input", deriv.input, "function json")->required();
    deriv_cmd->add_option("--grid", deriv.grid_text, "start:stop:step")->required();
    deriv_cmd->add_option("--alpha", deriv.alpha, "derivative order in (0, 1)");
    deriv_cmd->add_option("--side", deriv.side, "left | right | both");
    deriv_cmd->add_option("--engine", deriv.engine, "closed | gl | quad");
    deriv_cmd->add_option("--h", deriv.gl_step, "gl engine step");
    deriv_cmd->add_option("--format", deriv.format, "csv | json");
    deriv_cmd->add_option("--output", deriv.output, "output path (default stdout)");

    CharacterizeConfig chr;
    auto* chr_cmd = app.add_subcommand(
        "characterize", "detect kinks in a sampled signal and quantify them");
    chr_cmd->add_option("--input", chr.input, "signal csv with header x,y")->required();
    chr_cmd->add_option("--alpha", chr.alpha, "derivative order in (0, 1)");
    chr_cmd->add_option("--engine", chr.engine, "closed | quad");
    chr_cmd->add_option("--threshold", chr.threshold,
                        "slope-jump detection threshold (default 1e-6 * max slope)");
    chr_cmd->add_option("--slope-tolerance", chr.slope_tolerance,
                        "collinearity tolerance for sample merging");
    chr_cmd->add_option("--format", chr.format, "json");
    chr_cmd->add_option("--output", chr.output, "output path (default stdout)");

    PaperConfig paper;
    auto* paper_cmd = app.add_subcommand(
        "paper", "reproduce the built-in reference examples and list the known "
                 "discrepancies in their published closed forms");
    paper_cmd->add_option("--example", paper.example, "reference example id 1..5 (default all)");
    paper_cmd->add_option("--output", paper.output,
                          "directory for expression json and grid csv files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitFlags;
    }

    if (deriv_cmd->parsed()) return cmd_deriv(deriv);
    if (chr_cmd->parsed()) return cmd_characterize(chr);
    return cmd_paper(paper);
}
