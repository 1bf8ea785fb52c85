#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "frit/cli.hpp"
#include "frit/errors.hpp"
#include "frit/field.hpp"
#include "frit/field_io.hpp"
#include "frit/kernels.hpp"
#include "frit/test_fields.hpp"
#include "frit/transform.hpp"

namespace {

namespace fs = std::filesystem;

int run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"frit"};
    argv.insert(argv.end(), args.begin(), args.end());
    return frit::run_cli(static_cast<int>(argv.size()), argv.data());
}

bool ends_with(const std::string& name, const std::string& suffix) {
    return name.size() >= suffix.size() &&
           name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Unique existing file in dir whose name contains `needle` and ends in `ext`.
// Config snapshots are excluded when looking for plain .json summaries.
std::string find_one(const std::string& dir, const std::string& needle,
                     const std::string& ext) {
    std::string found;
    int hits = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.find(needle) == std::string::npos || !ends_with(name, ext)) continue;
        if (ext == ".json" && ends_with(name, ".config.json")) continue;
        found = entry.path().string();
        ++hits;
    }
    REQUIRE(hits == 1);
    return found;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct TempDir {
    std::string path;
    explicit TempDir(const std::string& p) : path(p) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("apply writes artifacts that reproduce the library computation") {
    TempDir dir("frit-cli-apply");
    CHECK(run({"apply", "--n", "1", "--N", "32", "--L", "8", "--beta", "0", "--field",
               "single_mode", "--mode", "1", "--out-dir", dir.path.c_str()}) == 0);

    const std::string bin = find_one(dir.path, "apply_", ".bin");
    find_one(dir.path, "apply_", ".csv");
    const std::string cfg_path = find_one(dir.path, "apply_", ".config.json");

    frit::GridField got = frit::read_field_binary(bin);
    frit::BoxDomain box(1, 32, 8.0);
    frit::FieldParams p;
    p.mode = {1, 0, 0};
    frit::GridField f = frit::make_test_field(box, frit::FieldKind::single_mode, p);
    frit::GridField want = frit::apply_spectral(f, frit::KernelSpec(1, 1, 0.0));
    CHECK(got.box == box);
    CHECK((got.values - want.values).abs().maxCoeff() == 0.0);

    // The config snapshot parses back to the run's settings.
    frit::RunConfig snap = frit::config_from_json(slurp(cfg_path));
    CHECK(snap.n == 1);
    CHECK(snap.N == 32);
    CHECK(snap.beta == 0.0);
    CHECK(snap.field == "single_mode");
}

TEST_CASE("apply direct route works where defined and rejects beta zero") {
    TempDir dir("frit-cli-direct");
    CHECK(run({"apply", "--n", "1", "--N", "32", "--L", "8", "--beta", "0.8", "--route",
               "direct", "--field", "single_mode", "--mode", "1", "--out-dir",
               dir.path.c_str()}) == 0);
    CHECK(run({"apply", "--n", "1", "--N", "32", "--L", "8", "--beta", "0", "--route",
               "direct", "--field", "single_mode", "--mode", "1", "--out-dir",
               dir.path.c_str()}) == 2);
}

TEST_CASE("bad invocations exit with the parse and config code") {
    CHECK(run({"apply", "--field", "no_such_field", "--n", "1", "--N", "32", "--mode", "1"}) ==
          2);
    CHECK(run({"apply", "--no-such-flag"}) == 2);
    CHECK(run({}) == 2);              // a subcommand is required
    CHECK(run({"--help"}) == 0);
    CHECK(run({"apply", "--n", "9", "--N", "32"}) == 2);   // bad dimension
    CHECK(run({"apply", "--n", "2", "--N", "33"}) == 2);   // not a power of two
    CHECK(run({"sweep", "--kind", "no-such-kind", "--n", "1", "--N", "32"}) == 2);
    CHECK(run({"sqg", "--n", "1", "--N", "32"}) == 2);     // velocity law needs n = 2
}

TEST_CASE("config document loads under the command line") {
    TempDir dir("frit-cli-config");
    const std::string cfg_path = dir.path + "/run.json";
    {
        std::ofstream out(cfg_path);
        out << R"({"n": 1, "N": 16, "L": 8.0, "beta": 0.0, "field": "single_mode",)"
            << R"( "mode": [1], "out_dir": ")" << dir.path << R"("})";
    }
    // The explicit flag overrides the document's N = 16.
    CHECK(run({"apply", "--config", cfg_path.c_str(), "--N", "32"}) == 0);
    find_one(dir.path, "apply_n1_N32", ".bin");

    const std::string bad_key = dir.path + "/bad_key.json";
    {
        std::ofstream out(bad_key);
        out << R"({"grid_points": 32})";
    }
    CHECK(run({"apply", "--config", bad_key.c_str()}) == 2);

    const std::string bad_type = dir.path + "/bad_type.json";
    {
        std::ofstream out(bad_type);
        out << R"({"N": "many"})";
    }
    CHECK(run({"apply", "--config", bad_type.c_str()}) == 2);

    const std::string bad_syntax = dir.path + "/bad_syntax.json";
    {
        std::ofstream out(bad_syntax);
        out << "{";
    }
    CHECK(run({"apply", "--config", bad_syntax.c_str()}) == 2);
    CHECK(run({"apply", "--config", (dir.path + "/missing.json").c_str()}) == 2);
}

TEST_CASE("config serialization round trips through its own renderer") {
    frit::RunConfig cfg;
    const std::string text = frit::render_config_json(cfg);
    frit::RunConfig back = frit::config_from_json(text);
    CHECK(frit::render_config_json(back) == text);

    frit::RunConfig tweaked = frit::config_from_json(R"({"beta": 0.25, "mode": [3, 1]})");
    CHECK(tweaked.beta == 0.25);
    REQUIRE(tweaked.mode.size() == 2);
    CHECK(tweaked.mode[0] == 3);
    CHECK(tweaked.mode[1] == 1);
    CHECK(tweaked.N == cfg.N);  // unmentioned keys keep their defaults
}

TEST_CASE("norm bound sweep emits csv rows and a summary document") {
    TempDir dir("frit-cli-sweep");
    CHECK(run({"sweep", "--kind", "norm-bound", "--n", "1", "--N", "32", "--L", "8",
               "--field", "gaussian", "--q", "2", "--beta-grid", "0", "0.3", "--out-dir",
               dir.path.c_str()}) == 0);

    const std::string csv = slurp(find_one(dir.path, "norm-bound", ".csv"));
    CHECK(csv.rfind("beta,T_f_q_norm", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + two rows

    const auto summary = nlohmann::json::parse(slurp(find_one(dir.path, "norm-bound", ".json")));
    CHECK(summary.at("row_count").get<int>() == 2);
    CHECK(summary.at("constant").at("value").get<double>() > 0.0);
    CHECK(summary.contains("uniform"));
}

TEST_CASE("weak type shortcut flag selects the distribution sweep") {
    TempDir dir("frit-cli-weak");
    CHECK(run({"sweep", "--weak-type", "--n", "1", "--N", "32", "--L", "8", "--beta", "0.5",
               "--field", "indicator", "--t-points", "5", "--out-dir", dir.path.c_str()}) == 0);
    const auto summary = nlohmann::json::parse(slurp(find_one(dir.path, "weak-type", ".json")));
    CHECK(summary.at("row_count").get<int>() == 5);
    CHECK(summary.at("constant").at("value").get<double>() > 0.0);
}

TEST_CASE("dedicated weaktype and multiplier subcommands run standalone") {
    TempDir dir("frit-cli-short");
    CHECK(run({"weaktype", "--n", "1", "--N", "32", "--L", "8", "--beta", "0.5", "--field",
               "indicator", "--t-points", "4", "--out-dir", dir.path.c_str()}) == 0);
    find_one(dir.path, "weaktype_", ".csv");

    CHECK(run({"multiplier", "--n", "1", "--beta-grid", "0.5", "--quadrature-M", "64",
               "--points-per-regime", "2", "--out-dir", dir.path.c_str()}) == 0);
    const auto summary =
        nlohmann::json::parse(slurp(find_one(dir.path, "multiplier_", ".json")));
    CHECK(summary.at("ratio_spread").get<double>() >= 0.0);
    CHECK(summary.contains("small_y_worst_fraction"));
}

TEST_CASE("cube decomposition artifacts recombine to the input field") {
    TempDir dir("frit-cli-czd");
    CHECK(run({"czd", "--n", "1", "--N", "64", "--L", "16", "--beta", "0.5", "--field",
               "indicator", "--out-dir", dir.path.c_str()}) == 0);

    const auto doc = nlohmann::json::parse(slurp(find_one(dir.path, "czd_", ".json")));
    CHECK(doc.at("cube_count").get<int>() >= 1);
    CHECK(doc.at("t").get<double>() > 0.0);
    CHECK(doc.at("tail").at("max_ratio").get<double>() >= 0.0);

    frit::GridField g = frit::read_field_binary(find_one(dir.path, "_good", ".bin"));
    frit::GridField b = frit::read_field_binary(find_one(dir.path, "_bad", ".bin"));
    frit::BoxDomain box(1, 64, 16.0);
    frit::GridField f = frit::make_test_field(box, frit::FieldKind::indicator_cube);
    CHECK((g.values + b.values - f.values).abs().maxCoeff() < 1e-12);
}

TEST_CASE("velocity subcommand writes both components and a summary") {
    TempDir dir("frit-cli-sqg");
    CHECK(run({"sqg", "--N", "32", "--L", "16", "--alpha", "0.3", "--field", "gaussian",
               "--out-dir", dir.path.c_str()}) == 0);
    find_one(dir.path, "_u1", ".bin");
    find_one(dir.path, "_u2", ".bin");
    const std::string csv = slurp(find_one(dir.path, "sqg_", ".csv"));
    CHECK(csv.rfind("i1,i2,x1,x2,u1,u2", 0) == 0);

    const auto doc = nlohmann::json::parse(slurp(find_one(dir.path, "sqg_", ".json")));
    CHECK(doc.at("alpha").get<double>() == 0.3);
    CHECK(doc.at("velocity_l2_norm").get<double>() > 0.0);
    CHECK(doc.at("divergence_l2").get<double>() <
          1e-8 * doc.at("velocity_l2_norm").get<double>());
    CHECK(doc.at("bridging_constant").get<double>() > 0.0);

    // The direct route also reports cross-route agreement.
    CHECK(run({"sqg", "--N", "32", "--L", "16", "--alpha", "0.5", "--route", "direct",
               "--field", "gaussian", "--out-dir", dir.path.c_str()}) == 0);
    const auto direct =
        nlohmann::json::parse(slurp(find_one(dir.path, "alpha0.5", ".json")));
    CHECK(direct.at("route_agreement_rel_l2").get<double>() < 1e-12);
}

TEST_CASE("identical invocations write byte-identical artifacts") {
    TempDir a("frit-cli-det-a");
    TempDir b("frit-cli-det-b");
    const std::initializer_list<const char*> base = {
        "apply", "--n", "2", "--N", "32", "--L", "16", "--beta", "0.5",
        "--field", "band_limited", "--seed", "77"};

    std::vector<const char*> run_a{"frit"};
    run_a.insert(run_a.end(), base.begin(), base.end());
    run_a.push_back("--out-dir");
    run_a.push_back(a.path.c_str());
    std::vector<const char*> run_b{"frit"};
    run_b.insert(run_b.end(), base.begin(), base.end());
    run_b.push_back("--out-dir");
    run_b.push_back(b.path.c_str());

    CHECK(frit::run_cli(static_cast<int>(run_a.size()), run_a.data()) == 0);
    CHECK(frit::run_cli(static_cast<int>(run_b.size()), run_b.data()) == 0);

    CHECK(slurp(find_one(a.path, "apply_", ".bin")) == slurp(find_one(b.path, "apply_", ".bin")));
    CHECK(slurp(find_one(a.path, "apply_", ".csv")) == slurp(find_one(b.path, "apply_", ".csv")));
}
