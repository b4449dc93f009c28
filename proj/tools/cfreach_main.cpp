#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfreach/chen_fliess.hpp"
#include "cfreach/errors.hpp"
#include "cfreach/grid.hpp"
#include "cfreach/lie_series.hpp"
#include "cfreach/mixed_monotone.hpp"
#include "cfreach/monte_carlo.hpp"
#include "cfreach/reach_envelope.hpp"
#include "cfreach/system_spec.hpp"
#include "cfreach/word.hpp"

namespace {

using namespace cfreach;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct OutputTarget {
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        out << text;
    }
};

struct SourceOptions {
    std::string system_path;
    std::string fixture_name;

    SystemDescription load() const {
        if (!system_path.empty() && !fixture_name.empty())
            throw SpecError("system", "give either --system or --fixture, not both");
        if (!fixture_name.empty()) return fixture(fixture_name);
        if (system_path.empty())
            throw SpecError("system", "one of --system or --fixture is required");
        return load_system_spec(system_path);
    }
};

void add_source_options(CLI::App& cmd, SourceOptions& src) {
    cmd.add_option("--system", src.system_path, "Path to a system description JSON file");
    cmd.add_option("--fixture", src.fixture_name,
                   "Built-in system: ferfera or lotka-volterra");
}

std::vector<double> reporting_grid(double t_final, int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int p = 0; p < points; ++p)
        grid[static_cast<std::size_t>(p)] = grid_point(t_final, points, p);
    return grid;
}

int substeps_for(double t_final, int points, double dt) {
    const double interval = t_final / (points - 1);
    return std::max(1, static_cast<int>(std::ceil(interval / dt - 1e-12)));
}

std::vector<FormalPowerSeries> all_series(const PolySystem& sys, int order) {
    std::vector<FormalPowerSeries> series;
    series.reserve(static_cast<std::size_t>(sys.n_outputs()));
    for (int j = 0; j < sys.n_outputs(); ++j)
        series.push_back(generate_coefficients(sys, j, order));
    return series;
}

int run_coeffs(const SystemDescription& desc, int order, int output,
               const OutputTarget& out) {
    if (output < 0 || output >= desc.system.n_outputs())
        throw SpecError("h", "output index out of range");
    const auto series = generate_coefficients(desc.system, output, order);
    std::string text = "word,length,x0_count,coefficient\n";
    for (const auto& [w, coeff] : series.coefficients()) {
        text += w.str();
        text += ',' + std::to_string(w.length());
        text += ',' + std::to_string(w.count_letter(0));
        text += ',' + num(coeff) + '\n';
    }
    out.write(text);
    return 0;
}

ReachEnvelope envelope_for(const SystemDescription& desc, int order, double t_final,
                           int points, bool tail) {
    const auto series = all_series(desc.system, order);
    const InputBox box{desc.system.m, desc.input_box};
    auto env = reach_envelope(series, box, reporting_grid(t_final, points));
    if (tail) {
        if (!desc.growth) throw SpecError("growth", "required by --tail");
        std::vector<double> margins;
        margins.reserve(env.t_grid.size());
        for (double t : env.t_grid)
            margins.push_back(
                tail_bound(desc.growth->k, desc.growth->m, desc.system.m, box, order, t));
        env.tail = std::move(margins);
    }
    return env;
}

std::string envelope_csv(const ReachEnvelope& env, const char* lo_name,
                         const char* hi_name) {
    std::string text = "t";
    for (std::size_t j = 0; j < env.lower.size(); ++j) {
        text += ',' + std::string(lo_name) + '_' + std::to_string(j + 1);
        text += ',' + std::string(hi_name) + '_' + std::to_string(j + 1);
    }
    text += '\n';
    for (std::size_t p = 0; p < env.t_grid.size(); ++p) {
        const double margin = env.tail ? (*env.tail)[p] : 0.0;
        text += num(env.t_grid[p]);
        for (std::size_t j = 0; j < env.lower.size(); ++j) {
            text += ',' + num(env.lower[j][p] - margin);
            text += ',' + num(env.upper[j][p] + margin);
        }
        text += '\n';
    }
    return text;
}

int run_reach(const SystemDescription& desc, int order, double t_final, int points,
              bool tail, const OutputTarget& out) {
    out.write(envelope_csv(envelope_for(desc, order, t_final, points, tail), "lower",
                           "upper"));
    return 0;
}

EmbeddingTrajectory embedding_for(const SystemDescription& desc, double t_final,
                                  int points, double dt, int grid_pts) {
    const auto& sys = desc.system;
    const std::vector<double> u_low(static_cast<std::size_t>(sys.m), desc.input_box.lo);
    const std::vector<double> u_high(static_cast<std::size_t>(sys.m), desc.input_box.hi);
    return integrate_embedding(sys, sys.z0, sys.z0, u_low, u_high,
                               reporting_grid(t_final, points), grid_pts,
                               substeps_for(t_final, points, dt));
}

int run_mm(const SystemDescription& desc, double t_final, int points, double dt,
           int grid_pts, const OutputTarget& out) {
    const auto traj = embedding_for(desc, t_final, points, dt, grid_pts);
    std::string text = "t";
    for (std::size_t j = 0; j < traj.output_boxes.size(); ++j) {
        text += ",lo_" + std::to_string(j + 1);
        text += ",hi_" + std::to_string(j + 1);
    }
    text += '\n';
    for (std::size_t p = 0; p < traj.t_grid.size(); ++p) {
        text += num(traj.t_grid[p]);
        for (const auto& boxes : traj.output_boxes) {
            text += ',' + num(boxes[p].lo);
            text += ',' + num(boxes[p].hi);
        }
        text += '\n';
    }
    out.write(text);
    return 0;
}

int run_mc(const SystemDescription& desc, double t_final, int points, double dt,
           int samples, int segments, std::uint64_t seed, const std::string& dump_dir,
           const OutputTarget& out) {
    const InputBox box{desc.system.m, desc.input_box};
    std::vector<std::vector<std::vector<double>>> trajectories;
    const auto reach = empirical_reach(desc.system, box, segments, samples, seed, t_final,
                                       points, substeps_for(t_final, points, dt),
                                       dump_dir.empty() ? nullptr : &trajectories);

    if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        for (std::size_t s = 0; s < trajectories.size(); ++s) {
            char name[32];
            std::snprintf(name, sizeof(name), "sample_%04zu.csv", s);
            std::string text = "t";
            for (std::size_t j = 0; j < trajectories[s].size(); ++j)
                text += ",y_" + std::to_string(j + 1);
            text += '\n';
            for (std::size_t p = 0; p < reach.t_grid.size(); ++p) {
                text += num(reach.t_grid[p]);
                for (const auto& curve : trajectories[s]) text += ',' + num(curve[p]);
                text += '\n';
            }
            std::ofstream file(std::filesystem::path(dump_dir) / name);
            if (!file) throw std::runtime_error("cannot write trajectory dump");
            file << text;
        }
    }

    std::string text = "t";
    for (std::size_t j = 0; j < reach.min_curve.size(); ++j) {
        text += ",emp_min_" + std::to_string(j + 1);
        text += ",emp_max_" + std::to_string(j + 1);
    }
    text += '\n';
    for (std::size_t p = 0; p < reach.t_grid.size(); ++p) {
        text += num(reach.t_grid[p]);
        for (std::size_t j = 0; j < reach.min_curve.size(); ++j) {
            text += ',' + num(reach.min_curve[j][p]);
            text += ',' + num(reach.max_curve[j][p]);
        }
        text += '\n';
    }
    out.write(text);
    return 0;
}

int run_check(const SystemDescription& desc, int order, double t_final, int points,
              double dt, int grid_pts, int samples, int segments, std::uint64_t seed,
              bool tail, const OutputTarget& out) {
    const auto& sys = desc.system;
    const auto series = all_series(sys, order);
    const InputBox box{sys.m, desc.input_box};
    const auto env = envelope_for(desc, order, t_final, points, tail);
    const int substeps = substeps_for(t_final, points, dt);
    const int steps = (points - 1) * substeps;
    const double dt_fine = t_final / steps;

    const auto inputs = sample_inputs(sys.m, box, segments, t_final, samples, seed, steps);

    std::vector<double> series_eps;
    for (const auto& c : series) {
        const auto bounds = bound_coefficients(c, box);
        double scale = 1.0;
        for (const auto& [w, v] : bounds.lower.coefficients()) scale += std::abs(v);
        for (const auto& [w, v] : bounds.upper.coefficients()) scale += std::abs(v);
        series_eps.push_back(10.0 * dt_fine * dt_fine * scale);
    }

    long series_violations = 0;
    long ode_violations = 0;
    long tail_violations = 0;

    const auto traj = embedding_for(desc, t_final, points, dt, grid_pts);

    for (const auto& u : inputs) {
        const auto ode = simulate(sys, u);
        for (std::size_t j = 0; j < series.size(); ++j) {
            const auto truncated = evaluate_series(series[j], u);
            for (int p = 0; p < points; ++p) {
                const auto fine = static_cast<std::size_t>(p) *
                                  static_cast<std::size_t>(substeps);
                const auto up = static_cast<std::size_t>(p);
                const double y = truncated[fine];
                if (y < env.lower[j][up] - series_eps[j] ||
                    y > env.upper[j][up] + series_eps[j])
                    ++series_violations;

                const double y_ode = ode[j][fine];
                const Interval mm_box = traj.output_boxes[j][up];
                const double mm_tol =
                    1e-6 * std::max({1.0, std::abs(mm_box.lo), std::abs(mm_box.hi)});
                if (y_ode < mm_box.lo - mm_tol || y_ode > mm_box.hi + mm_tol)
                    ++ode_violations;

                if (tail) {
                    const double margin = (*env.tail)[up] + 1e-9;
                    if (y_ode < env.lower[j][up] - margin ||
                        y_ode > env.upper[j][up] + margin)
                        ++tail_violations;
                }
            }
        }
    }

    std::string text;
    text += "series containment: " + std::to_string(samples) + " samples, " +
            std::to_string(series_violations) + " violations\n";
    text += "embedding containment: " + std::to_string(samples) + " samples, " +
            std::to_string(ode_violations) + " violations\n";
    if (tail)
        text += "tail containment: " + std::to_string(samples) + " samples, " +
                std::to_string(tail_violations) + " violations\n";
    out.write(text);
    return (series_violations + ode_violations + tail_violations) > 0 ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reachable-set envelopes for control-affine systems via Chen-Fliess "
                 "series interval arithmetic, with mixed-monotone and Monte-Carlo "
                 "baselines"};
    app.require_subcommand(1);

    SourceOptions src;
    OutputTarget out;
    int order = 0;
    int output = 0;
    double t_final = 1.0;
    int points = 101;
    double dt = 1e-3;
    int grid_pts = 33;
    int samples = 200;
    int segments = 4;
    std::uint64_t seed = 1;
    bool tail = false;
    std::string dump_dir;

    auto* coeffs = app.add_subcommand("coeffs", "Emit series coefficients as CSV");
    add_source_options(*coeffs, src);
    coeffs->add_option("--order", order, "Maximum word length")->required();
    coeffs->add_option("--output", output, "Output channel index")->capture_default_str();
    coeffs->add_option("--out", out.path, "Write CSV here instead of stdout");

    auto* reach = app.add_subcommand("reach", "Emit interval envelope CSV");
    add_source_options(*reach, src);
    reach->add_option("--order", order, "Truncation order")->required();
    reach->add_option("--t-final", t_final, "Time horizon")->capture_default_str();
    reach->add_option("--points", points, "Reporting grid size")->capture_default_str();
    reach->add_flag("--tail", tail, "Widen by the truncation tail bound");
    reach->add_option("--out", out.path, "Write CSV here instead of stdout");

    auto* mm = app.add_subcommand("mm", "Emit embedding-system box CSV");
    add_source_options(*mm, src);
    mm->add_option("--t-final", t_final, "Time horizon")->capture_default_str();
    mm->add_option("--dt", dt, "Integration step")->capture_default_str();
    mm->add_option("--grid", grid_pts, "Decomposition grid points per dimension")->capture_default_str();
    mm->add_option("--points", points, "Reporting grid size")->capture_default_str();
    mm->add_option("--out", out.path, "Write CSV here instead of stdout");

    auto* mc = app.add_subcommand("mc", "Emit empirical reach CSV from sampled inputs");
    add_source_options(*mc, src);
    mc->add_option("--t-final", t_final, "Time horizon")->capture_default_str();
    mc->add_option("--dt", dt, "Integration step")->capture_default_str();
    mc->add_option("--points", points, "Reporting grid size")->capture_default_str();
    mc->add_option("--samples", samples, "Sample count")->capture_default_str();
    mc->add_option("--segments", segments, "Pieces per sampled input")->capture_default_str();
    mc->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    mc->add_option("--dump-trajectories", dump_dir, "Directory for per-sample CSVs");
    mc->add_option("--out", out.path, "Write CSV here instead of stdout");

    auto* check = app.add_subcommand(
        "check", "Cross-validate envelope, embedding boxes, and sampled trajectories");
    add_source_options(*check, src);
    check->add_option("--order", order, "Truncation order")->required();
    check->add_option("--t-final", t_final, "Time horizon")->capture_default_str();
    check->add_option("--points", points, "Reporting grid size")->capture_default_str();
    check->add_option("--dt", dt, "Integration step")->capture_default_str();
    check->add_option("--grid", grid_pts, "Decomposition grid points per dimension")->capture_default_str();
    check->add_option("--samples", samples, "Sample count")->capture_default_str();
    check->add_option("--segments", segments, "Pieces per sampled input")->capture_default_str();
    check->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    check->add_flag("--tail", tail, "Also check trajectories against the tail-widened envelope");
    check->add_option("--out", out.path, "Write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto desc = src.load();
        if (coeffs->parsed()) return run_coeffs(desc, order, output, out);
        if (reach->parsed()) return run_reach(desc, order, t_final, points, tail, out);
        if (mm->parsed()) return run_mm(desc, t_final, points, dt, grid_pts, out);
        if (mc->parsed())
            return run_mc(desc, t_final, points, dt, samples, segments, seed, dump_dir, out);
        if (check->parsed())
            return run_check(desc, order, t_final, points, dt, grid_pts, samples, segments,
                             seed, tail, out);
    } catch (const SpecError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const DivergenceError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
