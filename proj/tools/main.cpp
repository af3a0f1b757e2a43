// Copyright 2026 The qangle developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 2 malformed input
// (files, flags, names), 3 tripped numerical guard.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "qangle/circle.hpp"
#include "qangle/common.hpp"
#include "qangle/curve.hpp"
#include "qangle/evolution.hpp"
#include "qangle/generator.hpp"
#include "qangle/geodesic.hpp"
#include "qangle/io.hpp"
#include "qangle/lifetime.hpp"
#include "qangle/line.hpp"
#include "qangle/multi_axis.hpp"
#include "qangle/state.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qangle;

struct RunConfig {
    double hbar = 1.0;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
};

// All CSV output uses round-trip precision so identical runs are
// byte-identical and values survive re-parsing.
std::ostringstream csv_stream() {
    std::ostringstream s;
    s << std::setprecision(17);
    return s;
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot write output file: " + path);
    }
    f << text;
}

void emit(const RunConfig &cfg, const ordered_json &doc, const std::string &csv) {
    write_text(cfg.out, cfg.format == "csv" ? csv : doc.dump(2) + "\n");
}

ordered_json verdict_doc(const BoundReport &report, double angle) {
    ordered_json j;
    j["context"] = report.context;
    j["substantial"] = angle >= kSubstantialAngle;
    j["angle_radians"] = angle;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["slack"] = report.slack;
    j["tolerance"] = report.tolerance;
    j["product"] = report.lhs > 0.0 ? report.rhs / report.lhs : 0.0;
    j["holds"] = report.holds;
    return j;
}

ordered_json demo_record(const std::string &name, ordered_json parameters,
                         std::optional<double> delta_star, double std_dev,
                         std::optional<double> product, bool holds,
                         ordered_json details) {
    ordered_json j;
    j["demo"] = name;
    j["parameters"] = std::move(parameters);
    j["delta_star"] = delta_star ? ordered_json(*delta_star) : ordered_json(nullptr);
    j["std_dev"] = std_dev;
    j["product"] = product ? ordered_json(*product) : ordered_json(nullptr);
    j["holds"] = holds;
    j["details"] = std::move(details);
    return j;
}

std::string demo_csv(const ordered_json &record) {
    auto s = csv_stream();
    s << "demo,delta_star,std_dev,product,holds\n";
    auto cell = [](const ordered_json &v) {
        return v.is_null() ? std::string() : v.dump();
    };
    s << record["demo"].get<std::string>() << ',' << cell(record["delta_star"]) << ','
      << cell(record["std_dev"]) << ',' << cell(record["product"]) << ','
      << (record["holds"].get<bool>() ? 1 : 0) << '\n';
    return s.str();
}

void write_profile_csv(const std::string &path, const std::vector<ProfilePoint> &rows) {
    auto s = csv_stream();
    s << "delta_s,angle,bound\n";
    for (const ProfilePoint &row : rows) {
        s << row.delta_s << ',' << row.angle << ',' << row.bound << '\n';
    }
    write_text(path, s.str());
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    }
    return grid;
}

// ---------------------------------------------------------------------
// Plain commands.

void run_angle(const RunConfig &cfg, const std::string &path_a,
               const std::string &path_b) {
    const StateVector a = io::load_state(path_a);
    const StateVector b = io::load_state(path_b);
    const double angle = quantum_angle(a, b).radians();
    ordered_json doc;
    doc["angle_radians"] = angle;
    doc["substantial"] = angle >= kSubstantialAngle;
    auto s = csv_stream();
    s << "angle_radians,substantial\n"
      << angle << ',' << (angle >= kSubstantialAngle ? 1 : 0) << '\n';
    emit(cfg, doc, s.str());
}

void run_evolve(const RunConfig &cfg, const std::string &gen_path,
                const std::string &state_path, double delta_s) {
    EvolutionContext ctx(io::load_generator(gen_path), cfg.hbar);
    const StateVector psi = io::load_state(state_path);
    const StateVector moved = evolve(ctx, psi, delta_s);
    auto s = csv_stream();
    s << "re,im\n";
    for (Eigen::Index i = 0; i < moved.dim(); ++i) {
        s << moved.amplitudes()(i).real() << ',' << moved.amplitudes()(i).imag() << '\n';
    }
    emit(cfg, io::state_to_json(moved), s.str());
}

void run_profile(const RunConfig &cfg, const std::string &gen_path,
                 const std::string &state_path, double lo, double hi, int steps) {
    if (steps < 2) {
        throw std::invalid_argument("profile: --steps must be at least 2");
    }
    if (!(hi > lo)) {
        throw std::invalid_argument("profile: --max must exceed --min");
    }
    EvolutionContext ctx(io::load_generator(gen_path), cfg.hbar);
    const StateVector psi = io::load_state(state_path);
    const auto rows = angle_profile(ctx, psi, linspace(lo, hi, steps));
    ordered_json doc = ordered_json::array();
    auto s = csv_stream();
    s << "delta_s,angle,bound\n";
    for (const ProfilePoint &row : rows) {
        ordered_json r;
        r["delta_s"] = row.delta_s;
        r["angle"] = row.angle;
        r["bound"] = row.bound;
        doc.push_back(std::move(r));
        s << row.delta_s << ',' << row.angle << ',' << row.bound << '\n';
    }
    emit(cfg, doc, s.str());
}

void run_geodesic(const RunConfig &cfg, const std::string &path_a,
                  const std::string &path_b, int segments) {
    if (segments < 1) {
        throw std::invalid_argument("geodesic: --segments must be at least 1");
    }
    const StateVector a = io::load_state(path_a);
    const StateVector b = io::load_state(path_b);
    const Curve curve = geodesic(a, b, static_cast<std::size_t>(segments));
    ordered_json doc = ordered_json::array();
    for (const CurveRow &row : curve_rows(curve)) {
        ordered_json r;
        r["t"] = row.t;
        r["omega"] = row.omega;
        r["cumulative_length"] = row.cumulative_length;
        r["angle_to_start"] = row.angle_to_start;
        doc.push_back(std::move(r));
    }
    emit(cfg, doc, curve_csv(curve));
}

void run_verdict(const RunConfig &cfg, const std::string &gen_path,
                 const std::string &state_path, double delta_s) {
    EvolutionContext ctx(io::load_generator(gen_path), cfg.hbar);
    const StateVector psi = io::load_state(state_path);
    const double angle = quantum_angle(evolve(ctx, psi, delta_s), psi).radians();
    const BoundReport report = certainty_verdict(ctx, psi, delta_s);
    const ordered_json doc = verdict_doc(report, angle);
    auto s = csv_stream();
    s << "substantial,angle_radians,lhs,rhs,slack,tolerance,product,holds\n"
      << (angle >= kSubstantialAngle ? 1 : 0) << ',' << angle << ',' << report.lhs
      << ',' << report.rhs << ',' << report.slack << ',' << report.tolerance << ','
      << (report.lhs > 0.0 ? report.rhs / report.lhs : 0.0) << ','
      << (report.holds ? 1 : 0) << '\n';
    emit(cfg, doc, s.str());
}

// ---------------------------------------------------------------------
// Demos.

struct DemoOptions {
    std::string name;
    std::string profile_out;
    int grid_n = 0;        // 0: per-demo default
    double grid_length = 0.0;  // 0: per-demo default
    double sigma = 1.0;
    int max_mode = 8;
    int mode_a = 0;
    int mode_b = 1;
    bool has_eigenstate = false;
    int eigenstate = 0;
    int levels = 61;
    double gamma = 1.0;
    double center = 0.0;
    double half_span = 4.0;
    bool two_level_lifetime = false;
    int axes = 2;
    std::vector<double> displacement;
    bool tensor_check = false;
};

void run_demo_two_level(const RunConfig &cfg, const DemoOptions &opt) {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = Complex(1.0, 0.0);
    a(1, 1) = Complex(-1.0, 0.0);
    EvolutionContext ctx(HermitianGenerator(std::move(a)), cfg.hbar);
    CVector p(2);
    p << Complex(std::numbers::sqrt2 / 2.0, 0.0), Complex(std::numbers::sqrt2 / 2.0, 0.0);
    const StateVector psi{std::move(p)};

    const OrbitStats stats = orbit_stats(ctx, psi);
    const double limit = 20.0 * cfg.hbar / stats.std_dev;
    const auto star = minimal_substantial_shift(ctx, psi, limit);
    const double at = star ? *star : limit;
    const BoundReport verdict = certainty_verdict(ctx, psi, at);
    const double angle = quantum_angle(evolve(ctx, psi, at), psi).radians();

    ordered_json params;
    params["hbar"] = cfg.hbar;
    params["seed"] = cfg.seed;
    ordered_json details;
    details["mean"] = stats.mean;
    details["omega"] = stats.omega;
    details["angle_at_delta_star"] = angle;
    details["verdict"] = verdict_doc(verdict, angle);
    const auto product =
        star ? std::optional<double>(*star * stats.std_dev / cfg.hbar) : std::nullopt;
    const ordered_json record = demo_record("two-level", std::move(params), star,
                                            stats.std_dev, product, verdict.holds,
                                            std::move(details));
    if (!opt.profile_out.empty()) {
        const double span = star ? 2.0 * *star : limit;
        write_profile_csv(opt.profile_out, angle_profile(ctx, psi, linspace(0.0, span, 201)));
    }
    emit(cfg, record, demo_csv(record));
}

void run_demo_line(const RunConfig &cfg, const DemoOptions &opt) {
    const int n = opt.grid_n > 0 ? opt.grid_n : 1024;
    const double length = opt.grid_length > 0.0 ? opt.grid_length : 40.0;
    const LineGrid grid(n, length);
    const StateVector psi = gaussian_packet(grid, 0.0, 0.0, opt.sigma, cfg.hbar);
    EvolutionContext ctx(momentum_operator(grid, cfg.hbar), cfg.hbar);

    const double dp = std_dev(ctx.generator(), psi);
    const double dx = std_dev(position_operator(grid), psi);
    const double limit = 20.0 * cfg.hbar / dp;
    const auto star = minimal_substantial_shift(ctx, psi, limit);
    const double at = star ? *star : limit;
    const BoundReport verdict = certainty_verdict(ctx, psi, at);
    const double angle = quantum_angle(evolve(ctx, psi, at), psi).radians();
    const BoundReport pauli = pauli_weyl_check(grid, psi, cfg.hbar);

    ordered_json params;
    params["hbar"] = cfg.hbar;
    params["seed"] = cfg.seed;
    params["grid_n"] = n;
    params["grid_length"] = length;
    params["sigma"] = opt.sigma;
    ordered_json details;
    details["position_spread"] = dx;
    details["momentum_spread"] = dp;
    details["angle_at_delta_star"] = angle;
    details["pauli_weyl"] = io::to_json(pauli);
    details["verdict"] = verdict_doc(verdict, angle);
    const auto product =
        star ? std::optional<double>(*star * dp / cfg.hbar) : std::nullopt;
    const ordered_json record = demo_record("line", std::move(params), star, dp,
                                            product, verdict.holds, std::move(details));
    if (!opt.profile_out.empty()) {
        const double span = star ? 2.0 * *star : limit;
        write_profile_csv(opt.profile_out, angle_profile(ctx, psi, linspace(0.0, span, 201)));
    }
    emit(cfg, record, demo_csv(record));
}

void run_demo_circle(const RunConfig &cfg, const DemoOptions &opt) {
    const CircleModel model(opt.max_mode);
    const StateVector psi =
        opt.has_eigenstate
            ? model.mode_state(opt.eigenstate)
            : model.superposition({opt.mode_a, opt.mode_b},
                                  {Complex(1.0, 0.0), Complex(1.0, 0.0)});
    const CircleReport rep = circle_certainty_demo(model, psi, cfg.hbar);

    ordered_json params;
    params["hbar"] = cfg.hbar;
    params["seed"] = cfg.seed;
    params["max_mode"] = opt.max_mode;
    if (opt.has_eigenstate) {
        params["eigenstate"] = opt.eigenstate;
    } else {
        params["mode_a"] = opt.mode_a;
        params["mode_b"] = opt.mode_b;
    }
    ordered_json details;
    details["eigenstate"] = rep.eigenstate;
    details["narrative"] = rep.narrative;
    details["verdict"] = io::to_json(rep.verdict);
    const ordered_json record =
        demo_record("circle", std::move(params), rep.delta_phi_star, rep.delta_j,
                    rep.product, rep.verdict.holds, std::move(details));
    if (!opt.profile_out.empty()) {
        EvolutionContext ctx(angular_momentum_operator(model, cfg.hbar), cfg.hbar);
        write_profile_csv(opt.profile_out,
                          angle_profile(ctx, psi, linspace(0.0, 4.0 * std::numbers::pi, 201)));
    }
    emit(cfg, record, demo_csv(record));
}

void run_demo_lifetime(const RunConfig &cfg, const DemoOptions &opt) {
    std::optional<LevelModel> model;
    if (opt.two_level_lifetime) {
        RVector energies(2), weights(2);
        energies << opt.center - opt.gamma, opt.center + opt.gamma;
        weights << 0.5, 0.5;
        model.emplace(std::move(energies), std::move(weights));
    } else {
        model.emplace(gaussian_levels(opt.levels, opt.center, opt.gamma, opt.half_span));
    }
    const LifetimeReport rep = lifetime_demo(*model, cfg.hbar);

    ordered_json params;
    params["hbar"] = cfg.hbar;
    params["seed"] = cfg.seed;
    params["two_level"] = opt.two_level_lifetime;
    params["levels"] = static_cast<int>(model->levels());
    params["gamma"] = opt.gamma;
    params["center"] = opt.center;
    if (!opt.two_level_lifetime) {
        params["half_span"] = opt.half_span;
    }
    ordered_json details;
    details["decays"] = rep.decays;
    details["verdict"] = io::to_json(rep.verdict);
    const ordered_json record = demo_record("lifetime", std::move(params), rep.t_star,
                                            rep.delta_h, rep.product,
                                            rep.verdict.holds, std::move(details));
    if (!opt.profile_out.empty()) {
        // Time shifts are generated by the negated energy operator.
        const Eigen::Index levels = model->levels();
        CMatrix m = CMatrix::Zero(levels, levels);
        RVector ev(levels);
        for (Eigen::Index i = 0; i < levels; ++i) {
            ev(i) = -model->energies()(i);
            m(i, i) = ev(i);
        }
        EvolutionContext ctx(HermitianGenerator::from_parts(
                                 std::move(m), CMatrix::Identity(levels, levels), std::move(ev)),
                             cfg.hbar);
        const double span = rep.t_star              ? 2.0 * *rep.t_star
                            : rep.delta_h > 0.0     ? 20.0 * cfg.hbar / rep.delta_h
                                                    : 1.0;
        write_profile_csv(opt.profile_out,
                          angle_profile(ctx, model->initial_state(), linspace(0.0, span, 201)));
    }
    emit(cfg, record, demo_csv(record));
}

void run_demo_multi_axis(const RunConfig &cfg, const DemoOptions &opt) {
    const int n = opt.grid_n > 0 ? opt.grid_n : 64;
    const double length = opt.grid_length > 0.0 ? opt.grid_length : 12.0;
    std::vector<double> displacement = opt.displacement;
    if (displacement.empty()) {
        displacement.assign(opt.axes, 3.0);
    } else if (displacement.size() == 1) {
        displacement.assign(opt.axes, displacement.front());
    } else if (displacement.size() != static_cast<std::size_t>(opt.axes)) {
        throw std::invalid_argument(
            "demo multi-axis: --displacement takes one value or one per axis");
    }
    const std::vector<LineGrid> grids(opt.axes, LineGrid(n, length));
    const std::vector<double> sigmas(opt.axes, opt.sigma);
    const MultiAxisReport rep =
        multi_axis_demo(grids, sigmas, displacement, cfg.hbar, opt.tensor_check);

    ordered_json params;
    params["hbar"] = cfg.hbar;
    params["seed"] = cfg.seed;
    params["axes"] = opt.axes;
    params["grid_n"] = n;
    params["grid_length"] = length;
    params["sigma"] = opt.sigma;
    params["displacement"] = displacement;
    params["tensor_check"] = opt.tensor_check;
    ordered_json details;
    details["angle"] = rep.angle;
    details["substantial"] = rep.substantial;
    details["axis_momentum_spread"] = rep.axis_momentum_spread;
    details["tensor_delta_b"] = rep.tensor_delta_b
                                    ? ordered_json(*rep.tensor_delta_b)
                                    : ordered_json(nullptr);
    details["verdict"] = io::to_json(rep.verdict);
    // The demo applies the full displacement in one unit of group
    // parameter, so the bound product is delta_b/hbar by construction.
    const ordered_json record =
        demo_record("multi-axis", std::move(params), std::nullopt, rep.delta_b,
                    rep.delta_b / cfg.hbar, rep.verdict.holds, std::move(details));
    if (!opt.profile_out.empty()) {
        std::vector<ProfilePoint> rows;
        for (double s : linspace(0.0, 2.0, 201)) {
            Complex overlap(1.0, 0.0);
            for (std::size_t i = 0; i < grids.size(); ++i) {
                const StateVector packet =
                    gaussian_packet(grids[i], 0.0, 0.0, sigmas[i], cfg.hbar);
                overlap *= inner(packet, shift_state(grids[i], packet, s * displacement[i]));
            }
            const double angle =
                std::acos(std::clamp(std::abs(overlap), 0.0, 1.0));
            rows.push_back({s, angle, s * rep.delta_b / cfg.hbar});
        }
        write_profile_csv(opt.profile_out, rows);
    }
    emit(cfg, record, demo_csv(record));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"angles between quantum rays: metric, kinematics, certainty bounds"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--hbar", cfg.hbar, "action scale (default 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed recorded in outputs");
    app.add_option("--format", cfg.format, "output format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out, "write output to this file instead of stdout");

    auto *angle_cmd = app.add_subcommand("angle", "angle between two state files");
    angle_cmd->fallthrough();
    std::string path_a, path_b;
    angle_cmd->add_option("--state-a", path_a, "state file")->required();
    angle_cmd->add_option("--state-b", path_b, "state file")->required();

    auto *evolve_cmd =
        app.add_subcommand("evolve", "apply exp(-i*delta*A/hbar) to a state file");
    evolve_cmd->fallthrough();
    std::string gen_path, state_path;
    double delta_s = 0.0;
    evolve_cmd->add_option("--generator", gen_path, "generator file")->required();
    evolve_cmd->add_option("--state", state_path, "state file")->required();
    evolve_cmd->add_option("--delta", delta_s, "shift parameter")->required();

    auto *profile_cmd =
        app.add_subcommand("profile", "angle opened vs shift, with the arc bound");
    profile_cmd->fallthrough();
    std::string pgen_path, pstate_path;
    double pmin = 0.0, pmax = 0.0;
    int psteps = 101;
    profile_cmd->add_option("--generator", pgen_path, "generator file")->required();
    profile_cmd->add_option("--state", pstate_path, "state file")->required();
    profile_cmd->add_option("--min", pmin, "first shift (default 0)");
    profile_cmd->add_option("--max", pmax, "last shift")->required();
    profile_cmd->add_option("--steps", psteps, "number of samples (default 101)");

    auto *geodesic_cmd =
        app.add_subcommand("geodesic", "shortest curve between two state files");
    geodesic_cmd->fallthrough();
    std::string ga_path, gb_path;
    int segments = 100;
    geodesic_cmd->add_option("--state-a", ga_path, "state file")->required();
    geodesic_cmd->add_option("--state-b", gb_path, "state file")->required();
    geodesic_cmd->add_option("--segments", segments, "sample segments (default 100)");

    auto *verdict_cmd =
        app.add_subcommand("verdict", "certainty bound check at one shift");
    verdict_cmd->fallthrough();
    std::string vgen_path, vstate_path;
    double vdelta = 0.0;
    verdict_cmd->add_option("--generator", vgen_path, "generator file")->required();
    verdict_cmd->add_option("--state", vstate_path, "state file")->required();
    verdict_cmd->add_option("--delta", vdelta, "shift parameter")->required();

    auto *demo_cmd = app.add_subcommand("demo", "built-in models");
    demo_cmd->fallthrough();
    DemoOptions opt;
    demo_cmd
        ->add_option("name", opt.name, "one of the built-in demos")
        ->required()
        ->check(CLI::IsMember({"two-level", "line", "circle", "lifetime", "multi-axis"}));
    demo_cmd->add_option("--profile-out", opt.profile_out,
                         "also write a (delta_s, angle, bound) CSV profile here");
    demo_cmd->add_option("--grid-n", opt.grid_n,
                         "grid sites (default: 1024 line, 64 multi-axis)");
    demo_cmd->add_option("--grid-length", opt.grid_length,
                         "domain length (default: 40 line, 12 multi-axis)");
    demo_cmd->add_option("--sigma", opt.sigma, "packet width (default 1)")
        ->check(CLI::PositiveNumber);
    demo_cmd->add_option("--max-mode", opt.max_mode, "circle mode truncation (default 8)");
    demo_cmd->add_option("--mode-a", opt.mode_a, "circle superposition mode (default 0)");
    demo_cmd->add_option("--mode-b", opt.mode_b, "circle superposition mode (default 1)");
    auto *eig_opt = demo_cmd->add_option("--eigenstate", opt.eigenstate,
                                         "circle: use this single mode instead");
    demo_cmd->add_option("--levels", opt.levels, "lifetime level count (default 61)");
    demo_cmd->add_option("--gamma", opt.gamma, "lifetime energy width (default 1)")
        ->check(CLI::PositiveNumber);
    demo_cmd->add_option("--center", opt.center, "lifetime center energy (default 0)");
    demo_cmd->add_option("--half-span", opt.half_span,
                         "lifetime span in widths (default 4)");
    demo_cmd->add_flag("--two-level", opt.two_level_lifetime,
                       "lifetime: equal-weight two-level model");
    demo_cmd->add_option("--axes", opt.axes, "multi-axis count (default 2)")
        ->check(CLI::Range(2, 3));
    demo_cmd->add_option("--displacement", opt.displacement,
                         "multi-axis shift, one value or one per axis (default 3)");
    demo_cmd->add_flag("--tensor-check", opt.tensor_check,
                       "multi-axis: recompute the spread on the full tensor space");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*angle_cmd) {
            run_angle(cfg, path_a, path_b);
        } else if (*evolve_cmd) {
            run_evolve(cfg, gen_path, state_path, delta_s);
        } else if (*profile_cmd) {
            run_profile(cfg, pgen_path, pstate_path, pmin, pmax, psteps);
        } else if (*geodesic_cmd) {
            run_geodesic(cfg, ga_path, gb_path, segments);
        } else if (*verdict_cmd) {
            run_verdict(cfg, vgen_path, vstate_path, vdelta);
        } else if (*demo_cmd) {
            opt.has_eigenstate = eig_opt->count() > 0;
            if (opt.name == "two-level") {
                run_demo_two_level(cfg, opt);
            } else if (opt.name == "line") {
                run_demo_line(cfg, opt);
            } else if (opt.name == "circle") {
                run_demo_circle(cfg, opt);
            } else if (opt.name == "lifetime") {
                run_demo_lifetime(cfg, opt);
            } else {
                run_demo_multi_axis(cfg, opt);
            }
        }
        return 0;
    } catch (const guard_error &e) {
        std::cerr << "numerical guard: " << e.what() << '\n';
        return 3;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
