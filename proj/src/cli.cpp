#include "frit/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frit/corpus.hpp"
#include "frit/czd.hpp"
#include "frit/field_io.hpp"
#include "frit/kernels.hpp"
#include "frit/selfcheck.hpp"
#include "frit/sqg.hpp"
#include "frit/test_fields.hpp"
#include "frit/transform.hpp"
#include "frit/verify.hpp"

namespace frit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// ---- filesystem helpers -----------------------------------------------------

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw config_error("cannot create output directory " + dir + ": " + ec.message());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot open " + path + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw config_error("short write to " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open config file " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Short decimal labels for file names (config/CSV keep full precision).
std::string format_label(Real v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// ---- field and level construction -------------------------------------------

GridField make_field(const RunConfig& cfg, const BoxDomain& box) {
    FieldParams p;
    p.amplitude = cfg.amplitude;
    p.sigma_fraction = cfg.sigma_fraction;
    p.bump_count = cfg.bump_count;
    p.indicator_side_fraction = cfg.indicator_side_fraction;
    p.band_limit = cfg.band_limit;
    p.mode = {0, 0, 0};
    for (std::size_t a = 0; a < cfg.mode.size() && a < 3; ++a) p.mode[a] = cfg.mode[a];
    p.seed = cfg.seed;
    return make_test_field(box, field_kind_from_name(cfg.field), p);
}

// Default decomposition level: geometric mean of the |f| box average and peak.
Real auto_level(const GridField& f) {
    const Real root = lq_norm(f, 1.0) / f.box.volume();
    const Real sup = lq_norm(f, std::numeric_limits<Real>::infinity());
    if (!(sup > 0.0)) throw config_error("decomposition level: field is identically zero");
    const Real t = std::sqrt(root * sup);
    if (!(t > root))
        throw config_error("decomposition level: field too flat for an automatic level; pass --t");
    return t;
}

std::vector<Real> auto_t_grid(const GridField& f, const KernelSpec& spec, int padding_factor,
                              int points) {
    if (points < 2) throw config_error("weak-type t grid needs at least 2 points");
    const GridField t1f = apply_T1_via_spectral(f, spec, padding_factor);
    const Real t0 = lq_norm(t1f, 1.0) / f.box.volume();
    if (!(t0 > 0.0)) throw config_error("weak-type t grid: operator output vanishes");
    std::vector<Real> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = t0 * std::pow(10.0, -2.0 + 4.0 * i / (points - 1));
    return grid;
}

// ---- report serialization ----------------------------------------------------

std::string sweep_csv(const SweepReport& rep) {
    std::string out;
    for (std::size_t c = 0; c < rep.columns.size(); ++c) {
        if (c) out += ',';
        out += rep.columns[c];
    }
    out += '\n';
    for (const SweepRow& row : rep.rows) {
        out += format_real(row.parameter) + "," + format_real(row.lhs) + "," +
               format_real(row.rhs) + "," + format_real(row.ratio);
        for (Real e : row.extra) out += "," + format_real(e);
        out += '\n';
    }
    return out;
}

json sweep_summary(const SweepReport& rep) {
    json meta = json::object();
    for (const auto& kv : rep.meta) meta[kv.first] = kv.second;
    json j;
    j["axis"] = rep.axis;
    j["columns"] = rep.columns;
    j["row_count"] = rep.rows.size();
    j["max_ratio"] = rep.max_ratio();
    j["min_positive_ratio"] = rep.min_positive_ratio();
    j["ratio_spread"] = rep.ratio_spread();
    j["meta"] = meta;
    return j;
}

json estimate_json(const ConstantEstimate& est) {
    json j;
    j["value"] = est.value;
    j["witness"] = est.witness;
    j["corpus"] = est.corpus;
    return j;
}

// ---- subcommands --------------------------------------------------------------

int cmd_apply(RunConfig cfg) {
    const BoxDomain box(cfg.n, cfg.N, cfg.L);
    const GridField f = make_field(cfg, box);
    const KernelSpec spec(cfg.n, cfg.j, cfg.beta);

    GridField tf;
    if (cfg.route == "spectral") {
        tf = apply_spectral(f, spec);
    } else if (cfg.route == "direct") {
        if (!spec.has_spatial_split())
            throw config_error(
                "route 'direct' needs beta > 0; at beta = 0 only the spectral route exists");
        tf = apply_T1_direct(f, spec, cfg.padding_factor);
        tf.values += apply_T2_direct(f, spec, cfg.padding_factor).values;
    } else {
        throw config_error("unknown route '" + cfg.route + "' (expected spectral|direct)");
    }

    ensure_dir(cfg.out_dir);
    const std::string name = artifact_stem("apply", cfg);
    const std::string stem = cfg.out_dir + "/" + name;
    write_field_binary(stem + ".bin", tf);
    write_field_csv(stem + ".csv", tf);
    write_text_file(stem + ".config.json", render_config_json(cfg));

    std::printf("input  L%s norm: %s\n", format_label(cfg.q).c_str(),
                format_real(lq_norm(f, cfg.q)).c_str());
    std::printf("output L%s norm: %s\n", format_label(cfg.q).c_str(),
                format_real(lq_norm(tf, cfg.q)).c_str());
    std::printf("wrote %s.bin, %s.csv\n", stem.c_str(), stem.c_str());
    return 0;
}

int run_sweep(RunConfig cfg, const std::string& command) {
    const BoxDomain box(cfg.n, cfg.N, cfg.L);

    SweepReport rep;
    json summary = json::object();
    bool have_rows = true;

    if (cfg.kind == "norm-bound") {
        if (cfg.beta_grid.empty())
            for (int i = 0; i <= 19; ++i) cfg.beta_grid.push_back(0.05 * i);
        const GridField f = make_field(cfg, box);
        rep = norm_bound_sweep(f, cfg.q, cfg.beta_grid, cfg.j);
        summary = sweep_summary(rep);
        summary["uniformity_threshold"] = cfg.uniformity_threshold;
        summary["uniform"] =
            rep.ratio_spread() > 0.0 && rep.ratio_spread() <= cfg.uniformity_threshold;
        summary["constant"] = estimate_json(max_ratio_estimate(rep, {cfg.field}));
    } else if (cfg.kind == "weak-type") {
        const GridField f = make_field(cfg, box);
        const KernelSpec spec(cfg.n, cfg.j, cfg.beta);
        const std::vector<Real> grid = auto_t_grid(f, spec, cfg.padding_factor, cfg.t_points);
        rep = weak_type_check(f, cfg.beta, grid, cfg.j, cfg.padding_factor);
        summary = sweep_summary(rep);
        summary["constant"] = estimate_json(max_ratio_estimate(rep, {cfg.field}));
    } else if (cfg.kind == "near-field-l2") {
        if (cfg.beta_grid.empty())
            for (int i = 1; i <= 9; ++i) cfg.beta_grid.push_back(0.1 * i);
        const GridField f = make_field(cfg, box);
        rep = near_field_l2_sweep(f, cfg.beta_grid, cfg.j, cfg.padding_factor);
        summary = sweep_summary(rep);
        summary["constant"] = estimate_json(max_ratio_estimate(rep, {cfg.field}));
    } else if (cfg.kind == "multiplier") {
        if (cfg.beta_grid.empty())
            for (int i = 1; 0.1 * i < cfg.n - 0.05; ++i) cfg.beta_grid.push_back(0.1 * i);
        rep = multiplier_sup_check(cfg.n, cfg.beta_grid, cfg.points_per_regime,
                                   cfg.quadrature_M, cfg.j);
        summary = sweep_summary(rep);
        summary["uniformity_threshold"] = cfg.uniformity_threshold;
        summary["uniform"] =
            rep.ratio_spread() > 0.0 && rep.ratio_spread() <= cfg.uniformity_threshold;
        // Worst measured fraction of the explicit small-frequency envelope.
        Real worst = 0.0;
        for (const SweepRow& row : rep.rows)
            if (row.extra.size() >= 2 && row.extra[1] > 0.0)
                worst = std::max(worst, row.extra[0] / row.extra[1]);
        summary["small_y_worst_fraction"] = worst;
    } else if (cfg.kind == "potential-contrast") {
        if (cfg.beta_grid.empty()) cfg.beta_grid = {0.05, 0.1, 0.2, 0.4};
        const GridField f = make_field(cfg, box);
        rep = riesz_potential_comparison(f, cfg.beta_grid, cfg.p, cfg.j, cfg.padding_factor);
        summary = sweep_summary(rep);
        const Real lo = rep.rows.back().ratio;
        summary["small_over_large_beta_growth"] =
            lo > 0.0 ? rep.rows.front().ratio / lo : 0.0;
    } else if (cfg.kind == "alpha") {
        if (cfg.alpha_grid.empty()) cfg.alpha_grid = {0.3, 0.4, 0.45, 0.49};
        const GridField f = make_field(cfg, box);
        rep = alpha_convergence(f, cfg.alpha_grid, cfg.q);
        summary = sweep_summary(rep);
        summary["final_ratio"] = rep.rows.back().ratio;
    } else if (cfg.kind == "far-field") {
        const GridField f = make_field(cfg, box);
        summary["constant"] = estimate_json(
            far_field_norm_check(f, cfg.beta, cfg.q, cfg.j, cfg.padding_factor));
        have_rows = false;
    } else if (cfg.kind == "interpolation-endpoints") {
        const GridField f = make_field(cfg, box);
        if (cfg.t <= 0.0) cfg.t = auto_level(f);
        const InterpolationReport ir = interpolation_endpoint_check(
            f, cfg.t, KernelSpec(cfg.n, cfg.j, cfg.beta), cfg.padding_factor);
        summary["t"] = ir.t;
        summary["strong2"] = ir.strong2;
        summary["weak1_at_t"] = ir.weak1_at_t;
        summary["strong_low"] = ir.strong_low;
        summary["strong_high"] = ir.strong_high;
        have_rows = false;
    } else {
        throw config_error("unknown sweep kind '" + cfg.kind +
                           "' (norm-bound|weak-type|near-field-l2|multiplier|potential-contrast|"
                           "alpha|far-field|interpolation-endpoints)");
    }

    ensure_dir(cfg.out_dir);
    const std::string stem = cfg.out_dir + "/" + artifact_stem(command, cfg);
    if (have_rows) write_text_file(stem + ".csv", sweep_csv(rep));
    write_text_file(stem + ".json", summary.dump(2) + "\n");
    write_text_file(stem + ".config.json", render_config_json(cfg));
    if (have_rows)
        std::printf("wrote %s.csv, %s.json (%zu rows)\n", stem.c_str(), stem.c_str(),
                    rep.rows.size());
    else
        std::printf("wrote %s.json\n", stem.c_str());
    return 0;
}

int cmd_czd(RunConfig cfg) {
    const BoxDomain box(cfg.n, cfg.N, cfg.L);
    const GridField f = make_field(cfg, box);
    if (cfg.t <= 0.0) cfg.t = auto_level(f);

    const CZResult cz = decompose(f, cfg.t);
    const KernelSpec spec(cfg.n, cfg.j, cfg.beta);
    const auto split = split_operator(cz, spec, cfg.padding_factor);
    const TailBoundReport tail = tail_bound_check(f, cfg.t, spec, cfg.q, cfg.padding_factor);

    ensure_dir(cfg.out_dir);
    const std::string name = artifact_stem("czd", cfg);
    const std::string stem = cfg.out_dir + "/" + name;
    write_field_binary(stem + "_good.bin", cz.g);
    write_field_binary(stem + "_bad.bin", cz.b);

    json cubes = json::array();
    for (std::size_t l = 0; l < cz.cubes.size(); ++l) {
        json c;
        c["level"] = cz.cubes[l].level;
        c["corner"] = std::vector<int>(cz.cubes[l].corner.begin(),
                                       cz.cubes[l].corner.begin() + box.n);
        c["side"] = cz.cubes[l].side(box);
        c["average"] = cz.cube_averages[l];
        c["ball_radius"] = cz.ball_radii[l];
        cubes.push_back(std::move(c));
    }
    json j;
    j["t"] = cz.t;
    j["cube_count"] = cz.cubes.size();
    j["cubes"] = std::move(cubes);
    j["F_measure"] = cz.F_measure;
    j["Fstar_measure"] = cz.Fstar_measure;
    j["Fstar_slack"] = cz.Fstar_slack;
    j["good_field_file"] = name + "_good.bin";
    j["bad_field_file"] = name + "_bad.bin";
    j["split_near_q_norm"] = lq_norm(split.first, cfg.q);
    j["split_far_q_norm"] = lq_norm(split.second, cfg.q);
    json tj;
    tj["q"] = tail.q;
    tj["p"] = tail.p;
    tj["max_ratio"] = tail.max_ratio;
    tj["ratios"] = tail.ratios;
    j["tail"] = std::move(tj);
    write_text_file(stem + ".json", j.dump(2) + "\n");
    write_text_file(stem + ".config.json", render_config_json(cfg));

    std::printf("t = %s, %zu cubes, tail max ratio %s\n", format_real(cz.t).c_str(),
                cz.cubes.size(), format_real(tail.max_ratio).c_str());
    std::printf("wrote %s.json, %s_good.bin, %s_bad.bin\n", stem.c_str(), stem.c_str(),
                stem.c_str());
    return 0;
}

std::string velocity_csv(const VelocityField& u) {
    const BoxDomain& box = u.box();
    std::string out = "i1,i2,x1,x2,u1,u2\n";
    out.reserve(static_cast<std::size_t>(box.size()) * 48 + 32);
    for (std::int64_t id = 0; id < box.size(); ++id) {
        const auto idx = box.unflatten(id);
        out += std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
               format_real(box.coord(idx[0])) + "," + format_real(box.coord(idx[1])) + "," +
               format_real(u.u1.values[id]) + "," + format_real(u.u2.values[id]) + "\n";
    }
    return out;
}

int cmd_sqg(RunConfig cfg) {
    if (cfg.n != 2) throw config_error("velocity reconstruction is two-dimensional; use --n 2");
    const BoxDomain box(2, cfg.N, cfg.L);
    const GridField omega = make_field(cfg, box);

    const bool direct = cfg.route == "direct";
    if (!direct && cfg.route != "spectral")
        throw config_error("unknown route '" + cfg.route + "' (expected spectral|direct)");
    const VelocityField u = direct ? velocity_direct(omega, cfg.alpha, cfg.padding_factor)
                                   : velocity_spectral(omega, cfg.alpha);

    const Real div = velocity_divergence_l2(u);
    const Real umag = lq_norm(u.magnitude(), 2.0);

    ensure_dir(cfg.out_dir);
    const std::string stem = cfg.out_dir + "/" + artifact_stem("sqg", cfg);
    write_field_binary(stem + "_u1.bin", u.u1);
    write_field_binary(stem + "_u2.bin", u.u2);
    write_text_file(stem + ".csv", velocity_csv(u));

    json j;
    j["alpha"] = cfg.alpha;
    j["route"] = cfg.route;
    j["velocity_l2_norm"] = umag;
    j["divergence_l2"] = div;
    j["bridging_constant"] = bridging_constant(cfg.alpha);
    if (direct) {
        const VelocityField us = velocity_spectral(omega, cfg.alpha);
        GridField d1(box), d2(box);
        d1.values = u.u1.values - us.u1.values;
        d2.values = u.u2.values - us.u2.values;
        const Real dn = std::hypot(lq_norm(d1, 2.0), lq_norm(d2, 2.0));
        const Real sn = std::hypot(lq_norm(us.u1, 2.0), lq_norm(us.u2, 2.0));
        j["route_agreement_rel_l2"] = sn > 0.0 ? dn / sn : dn;
    }
    write_text_file(stem + ".json", j.dump(2) + "\n");
    write_text_file(stem + ".config.json", render_config_json(cfg));

    std::printf("velocity L2 norm: %s, divergence L2: %s\n", format_real(umag).c_str(),
                format_real(div).c_str());
    std::printf("wrote %s_u1.bin, %s_u2.bin, %s.csv, %s.json\n", stem.c_str(), stem.c_str(),
                stem.c_str(), stem.c_str());
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    CheckOptions opt = CheckOptions::quick();
    opt.N = cfg.selftest_N;
    opt.seed = cfg.seed;

    const Real saved = detail::fault_injection_scale;
    if (cfg.inject_fault) detail::fault_injection_scale = 1.05;
    std::vector<CriterionResult> results;
    try {
        results = run_acceptance_criteria(opt);
    } catch (...) {
        detail::fault_injection_scale = saved;
        throw;
    }
    detail::fault_injection_scale = saved;

    std::fputs(render_report(results).c_str(), stdout);
    return all_passed(results) ? 0 : 1;
}

}  // namespace

// ---- config round-trip ---------------------------------------------------------

std::string render_config_json(const RunConfig& cfg) {
    ordered_json j;
    j["n"] = cfg.n;
    j["N"] = cfg.N;
    j["L"] = cfg.L;
    j["j"] = cfg.j;
    j["beta"] = cfg.beta;
    j["alpha"] = cfg.alpha;
    j["field"] = cfg.field;
    j["amplitude"] = cfg.amplitude;
    j["sigma_fraction"] = cfg.sigma_fraction;
    j["bump_count"] = cfg.bump_count;
    j["indicator_side_fraction"] = cfg.indicator_side_fraction;
    j["band_limit"] = cfg.band_limit;
    j["mode"] = cfg.mode;
    j["seed"] = cfg.seed;
    j["route"] = cfg.route;
    j["padding_factor"] = cfg.padding_factor;
    j["kind"] = cfg.kind;
    j["q"] = cfg.q;
    j["p"] = cfg.p;
    j["beta_grid"] = cfg.beta_grid;
    j["alpha_grid"] = cfg.alpha_grid;
    j["t_points"] = cfg.t_points;
    j["t"] = cfg.t;
    j["uniformity_threshold"] = cfg.uniformity_threshold;
    j["quadrature_M"] = cfg.quadrature_M;
    j["points_per_regime"] = cfg.points_per_regime;
    j["out_dir"] = cfg.out_dir;
    j["selftest_N"] = cfg.selftest_N;
    j["inject_fault"] = cfg.inject_fault;
    return j.dump(2) + "\n";
}

RunConfig config_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw config_error(std::string("config parse failure: ") + e.what());
    }
    if (!doc.is_object()) throw config_error("config document must be a JSON object");

    static const std::set<std::string> known = {
        "n",          "N",          "L",          "j",
        "beta",       "alpha",      "field",      "amplitude",
        "sigma_fraction",           "bump_count", "indicator_side_fraction",
        "band_limit", "mode",       "seed",       "route",
        "padding_factor",           "kind",       "q",
        "p",          "beta_grid",  "alpha_grid", "t_points",
        "t",          "uniformity_threshold",     "quadrature_M",
        "points_per_regime",        "out_dir",    "selftest_N",
        "inject_fault"};
    for (const auto& item : doc.items())
        if (!known.count(item.key())) throw config_error("unknown config key: " + item.key());

    RunConfig cfg;
    try {
        const auto load = [&doc](const char* key, auto& target) {
            if (doc.contains(key)) target = doc.at(key).get<std::decay_t<decltype(target)>>();
        };
        load("n", cfg.n);
        load("N", cfg.N);
        load("L", cfg.L);
        load("j", cfg.j);
        load("beta", cfg.beta);
        load("alpha", cfg.alpha);
        load("field", cfg.field);
        load("amplitude", cfg.amplitude);
        load("sigma_fraction", cfg.sigma_fraction);
        load("bump_count", cfg.bump_count);
        load("indicator_side_fraction", cfg.indicator_side_fraction);
        load("band_limit", cfg.band_limit);
        load("mode", cfg.mode);
        load("seed", cfg.seed);
        load("route", cfg.route);
        load("padding_factor", cfg.padding_factor);
        load("kind", cfg.kind);
        load("q", cfg.q);
        load("p", cfg.p);
        load("beta_grid", cfg.beta_grid);
        load("alpha_grid", cfg.alpha_grid);
        load("t_points", cfg.t_points);
        load("t", cfg.t);
        load("uniformity_threshold", cfg.uniformity_threshold);
        load("quadrature_M", cfg.quadrature_M);
        load("points_per_regime", cfg.points_per_regime);
        load("out_dir", cfg.out_dir);
        load("selftest_N", cfg.selftest_N);
        load("inject_fault", cfg.inject_fault);
    } catch (const json::exception& e) {
        throw config_error(std::string("config value has the wrong type: ") + e.what());
    }
    return cfg;
}

std::string artifact_stem(const std::string& command, const RunConfig& cfg) {
    std::string s = command + "_n" + std::to_string(cfg.n) + "_N" + std::to_string(cfg.N);
    if (command == "sweep") s += "_" + cfg.kind;

    if (command == "sqg") {
        s += "_alpha" + format_label(cfg.alpha);
    } else if (command == "sweep" && cfg.kind == "alpha" && !cfg.alpha_grid.empty()) {
        s += "_alpha" + format_label(cfg.alpha_grid.front()) + "-" +
             format_label(cfg.alpha_grid.back());
    } else if (!cfg.beta_grid.empty()) {
        s += "_beta" + format_label(cfg.beta_grid.front());
        if (cfg.beta_grid.size() > 1) s += "-" + format_label(cfg.beta_grid.back());
    } else {
        s += "_beta" + format_label(cfg.beta);
    }

    const bool symbol_only = command == "multiplier" || cfg.kind == "multiplier";
    if (!symbol_only) s += "_" + cfg.field;
    if (command == "sweep" || command == "weaktype" || command == "multiplier")
        s += "_" + std::string(corpus_id());
    return s;
}

int run_cli(int argc, const char* const* argv) {
    try {
        RunConfig cfg;
        // Layer 2: an optional JSON document; scanned before CLI11 so that
        // explicitly passed flags (layer 3) overwrite its values.
        for (int i = 1; i + 1 < argc; ++i)
            if (std::string(argv[i]) == "--config")
                cfg = config_from_json(read_text_file(argv[i + 1]));

        CLI::App app{
            "extended Riesz transform toolkit: spectral and sampled-kernel operator routes, "
            "cube decompositions, inequality sweeps, and velocity reconstruction"};
        app.require_subcommand(1);

        std::string config_path;  // consumed by the prepass; registered for parsing only
        const auto add_common = [&](CLI::App* c) {
            c->add_option("--config", config_path, "JSON config document; flags override it");
            c->add_option("--n", cfg.n, "dimension (1-3)");
            c->add_option("--N", cfg.N, "grid points per axis (power of two)");
            c->add_option("--L", cfg.L, "box side length");
            c->add_option("--seed", cfg.seed, "seed for stochastic fields");
            c->add_option("--out-dir", cfg.out_dir, "artifact directory");
            c->add_option("--padding-factor", cfg.padding_factor,
                          "zero-padding factor for the sampled-kernel route");
        };
        const auto add_field = [&](CLI::App* c) {
            c->add_option("--field", cfg.field,
                          "gaussian_bump|multi_bump|indicator_cube|band_limited_random|"
                          "single_mode");
            c->add_option("--amplitude", cfg.amplitude, "field amplitude");
            c->add_option("--sigma-fraction", cfg.sigma_fraction, "gaussian width / L");
            c->add_option("--bump-count", cfg.bump_count, "bumps in multi_bump");
            c->add_option("--indicator-side-fraction", cfg.indicator_side_fraction,
                          "indicator side / L");
            c->add_option("--band-limit", cfg.band_limit, "max |k| for band_limited_random");
            c->add_option("--mode", cfg.mode, "single_mode wavevector (1-3 integers)");
        };
        const auto add_kernel = [&](CLI::App* c) {
            c->add_option("--j", cfg.j, "kernel component (1..n)");
            c->add_option("--beta", cfg.beta, "homogeneity shift in [0, n)");
        };

        CLI::App* apply = app.add_subcommand("apply", "apply the operator and write the result");
        add_common(apply);
        add_field(apply);
        add_kernel(apply);
        apply->add_option("--route", cfg.route, "spectral|direct");
        apply->add_option("--q", cfg.q, "norm exponent for the printed summary");

        CLI::App* sweep = app.add_subcommand("sweep", "verification sweep (CSV + JSON summary)");
        add_common(sweep);
        add_field(sweep);
        add_kernel(sweep);
        sweep->add_option("--kind", cfg.kind,
                          "norm-bound|weak-type|near-field-l2|multiplier|potential-contrast|"
                          "alpha|far-field|interpolation-endpoints");
        sweep->add_flag_callback("--norm-bound", [&] { cfg.kind = "norm-bound"; },
                                 "shortcut for --kind norm-bound");
        sweep->add_flag_callback("--weak-type", [&] { cfg.kind = "weak-type"; },
                                 "shortcut for --kind weak-type");
        sweep->add_flag_callback("--multiplier", [&] { cfg.kind = "multiplier"; },
                                 "shortcut for --kind multiplier");
        sweep->add_flag_callback("--potential-contrast",
                                 [&] { cfg.kind = "potential-contrast"; },
                                 "shortcut for --kind potential-contrast");
        sweep->add_flag_callback("--alpha-convergence", [&] { cfg.kind = "alpha"; },
                                 "shortcut for --kind alpha");
        sweep->add_option("--q", cfg.q, "target norm exponent");
        sweep->add_option("--p", cfg.p, "input norm exponent (potential contrast)");
        sweep->add_option("--beta-grid", cfg.beta_grid, "explicit beta grid");
        sweep->add_option("--alpha-grid", cfg.alpha_grid, "explicit alpha grid");
        sweep->add_option("--t-points", cfg.t_points, "weak-type t grid size");
        sweep->add_option("--t", cfg.t, "decomposition level (0 = automatic)");
        sweep->add_option("--uniformity-threshold", cfg.uniformity_threshold,
                          "spread limit recorded in the summary");
        sweep->add_option("--quadrature-M", cfg.quadrature_M, "symbol quadrature resolution");
        sweep->add_option("--points-per-regime", cfg.points_per_regime,
                          "frequency samples per symbol regime");

        CLI::App* czd = app.add_subcommand("czd",
                                           "cube decomposition, operator split, tail check");
        add_common(czd);
        add_field(czd);
        add_kernel(czd);
        czd->add_option("--t", cfg.t, "level (0 = automatic)");
        czd->add_option("--q", cfg.q, "tail norm exponent");

        CLI::App* weaktype =
            app.add_subcommand("weaktype", "distribution bound ratios over a t grid");
        add_common(weaktype);
        add_field(weaktype);
        add_kernel(weaktype);
        weaktype->add_option("--t-points", cfg.t_points, "t grid size (4 decades)");

        CLI::App* multiplier =
            app.add_subcommand("multiplier", "near-field symbol sup over the three regimes");
        add_common(multiplier);
        add_kernel(multiplier);
        multiplier->add_option("--beta-grid", cfg.beta_grid, "explicit beta grid");
        multiplier->add_option("--quadrature-M", cfg.quadrature_M,
                               "symbol quadrature resolution");
        multiplier->add_option("--points-per-regime", cfg.points_per_regime,
                               "frequency samples per symbol regime");
        multiplier->add_option("--uniformity-threshold", cfg.uniformity_threshold,
                               "spread limit recorded in the summary");

        CLI::App* sqg = app.add_subcommand("sqg", "velocity reconstruction from a scalar field");
        add_common(sqg);
        add_field(sqg);
        sqg->add_option("--alpha", cfg.alpha, "smoothing exponent in (0, 1/2]");
        sqg->add_option("--route", cfg.route, "spectral|direct");

        CLI::App* selftest =
            app.add_subcommand("selftest", "acceptance suite at reduced resolution");
        selftest->add_option("--config", config_path, "JSON config document");
        selftest->add_option("--seed", cfg.seed, "seed for stochastic fields");
        selftest->add_option("--N", cfg.selftest_N, "reduced resolution (default 64)");
        selftest->add_flag("--inject-fault", cfg.inject_fault,
                           "corrupt the multiplier constant to prove the suite detects it");

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
            std::fputs((std::string(e.what()) + "\n").c_str(), stderr);
            return 2;
        }

        if (apply->parsed()) return cmd_apply(cfg);
        if (sweep->parsed()) return run_sweep(cfg, "sweep");
        if (czd->parsed()) return cmd_czd(cfg);
        if (weaktype->parsed()) {
            cfg.kind = "weak-type";
            return run_sweep(cfg, "weaktype");
        }
        if (multiplier->parsed()) {
            cfg.kind = "multiplier";
            return run_sweep(cfg, "multiplier");
        }
        if (sqg->parsed()) return cmd_sqg(cfg);
        if (selftest->parsed()) return cmd_selftest(cfg);
        return 2;
    } catch (const config_error& e) {
        std::fputs(("config error: " + std::string(e.what()) + "\n").c_str(), stderr);
        return 2;
    } catch (const invariant_error& e) {
        std::fputs(("invariant violation: " + std::string(e.what()) + "\n").c_str(), stderr);
        return 3;
    } catch (const std::exception& e) {
        std::fputs(("error: " + std::string(e.what()) + "\n").c_str(), stderr);
        return 1;
    }
}

}  // namespace frit
