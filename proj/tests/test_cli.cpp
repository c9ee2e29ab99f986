#include "bgap/config.hpp"
#include "cli/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <sstream>

using namespace bgap;
using namespace bgap::cli;

namespace {

fs::path fresh_dir(const std::string& name)
{
    static std::atomic<int> counter{0};
    const auto dir = fs::temp_directory_path() / ("bgap_cli_" + name + "_" + std::to_string(::getpid()) + "_" +
                                                  std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const fs::path& p, const std::string& s)
{
    std::ofstream out(p, std::ios::binary);
    out << s;
}

std::size_t count(const std::string& haystack, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1))
        ++n;
    return n;
}

RunConfig bundled(const fs::path& out, std::initializer_list<std::pair<const char*, const char*>> overrides = {})
{
    auto cfg = ConfigFile::load(BGAP_DATA_DIR "/toolkit.cfg");
    for (const auto& [k, v] : overrides)
        cfg.set(k, v, fs::current_path());
    cfg.set("output.out", out.string());
    return RunConfig::from_config(cfg);
}

int run(int (*cmd)(const RunConfig&, Streams), const RunConfig& rc, std::string* err_text = nullptr)
{
    std::ostringstream log, err;
    const int code = guarded([&] { return cmd(rc, {log, err}); }, err);
    if (err_text)
        *err_text = err.str();
    return code;
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST_CASE("ingest builds the 1951-2019 panel")
{
    const auto out = fresh_dir("ingest");
    REQUIRE(run(cmd_ingest, bundled(out)) == exit_ok);
    const auto csv = slurp(out / "panel.csv");
    CHECK(line_count(csv) == 1 + 276);
    CHECK(csv.find("\n1951Q1,") != std::string::npos);
    CHECK(csv.find("\n2019Q4,") != std::string::npos);
    CHECK(csv.find("\n2020Q1,") == std::string::npos);
}

TEST_CASE("missing vacancy file is an input error")
{
    const auto out = fresh_dir("missing");
    std::string err;
    CHECK(run(cmd_ingest, bundled(out, {{"data.vacancy_post", "/nonexistent/jolts.csv"}}), &err) == exit_input_error);
    CHECK(err.find("jolts.csv") != std::string::npos);
}

TEST_CASE("malformed rows report file and line")
{
    const auto dir = fresh_dir("malformed");
    spit(dir / "u.csv", "date,value\n2000-01,4\n2000-02,oops\n");
    std::string err;
    CHECK(run(cmd_ingest, bundled(dir, {{"data.unemployment", (dir / "u.csv").c_str()}}), &err) == exit_input_error);
    CHECK(err.find("u.csv") != std::string::npos);
    CHECK(err.find("line 3") != std::string::npos);
}

TEST_CASE("percent and fraction inputs give the same panel")
{
    const auto dir = fresh_dir("units");
    const char* u_pct = "date,value\n2000-01,4.0\n2000-02,4.1\n2000-03,4.2\n2000-04,4.3\n2000-05,4.4\n2000-06,4.5\n";
    const char* u_frac =
        "date,value\n2000-01,0.040\n2000-02,0.041\n2000-03,0.042\n2000-04,0.043\n2000-05,0.044\n2000-06,0.045\n";
    const char* pre_pct = "date,value\n2000-01,3.0\n2000-02,3.0\n2000-03,3.1\n";
    const char* pre_frac = "date,value\n2000-01,0.030\n2000-02,0.030\n2000-03,0.031\n";
    const char* post_pct = "date,value\n2000-04,2.9\n2000-05,2.8\n2000-06,2.7\n";
    const char* post_frac = "date,value\n2000-04,0.029\n2000-05,0.028\n2000-06,0.027\n";
    spit(dir / "u_pct.csv", u_pct);
    spit(dir / "u_frac.csv", u_frac);
    spit(dir / "pre_pct.csv", pre_pct);
    spit(dir / "pre_frac.csv", pre_frac);
    spit(dir / "post_pct.csv", post_pct);
    spit(dir / "post_frac.csv", post_frac);

    const auto a = dir / "a", b = dir / "b";
    REQUIRE(run(cmd_ingest, bundled(a, {{"data.unemployment", (dir / "u_pct.csv").c_str()},
                                        {"data.vacancy_pre", (dir / "pre_pct.csv").c_str()},
                                        {"data.vacancy_post", (dir / "post_pct.csv").c_str()},
                                        {"data.cutover", "2000Q2"},
                                        {"data.unit", "percent"}})) == exit_ok);
    REQUIRE(run(cmd_ingest, bundled(b, {{"data.unemployment", (dir / "u_frac.csv").c_str()},
                                        {"data.vacancy_pre", (dir / "pre_frac.csv").c_str()},
                                        {"data.vacancy_post", (dir / "post_frac.csv").c_str()},
                                        {"data.cutover", "2000Q2"},
                                        {"data.unit", "fraction"}})) == exit_ok);
    CHECK(slurp(a / "panel.csv") == slurp(b / "panel.csv"));
}

TEST_CASE("fit writes seven regimes and one marker per observation")
{
    const auto out = fresh_dir("fit");
    REQUIRE(run(cmd_fit, bundled(out)) == exit_ok);
    const auto est = slurp(out / "estimates.csv");
    CHECK(line_count(est) == 1 + 7);

    std::istringstream rows(est);
    std::string line;
    std::getline(rows, line);
    while (std::getline(rows, line)) {
        const auto label = line.substr(0, line.find(','));
        const auto n_obs = std::stoi(line.substr(line.rfind(',') + 1));
        const auto svg = slurp(out / "figures" / ("fit_" + label + ".svg"));
        CHECK(count(svg, "class=\"obs\"") == static_cast<std::size_t>(n_obs));
    }
}

TEST_CASE("single-regime table gives one row")
{
    const auto dir = fresh_dir("one_regime");
    spit(dir / "regimes.txt", "recent,2010Q1,2019Q4\n");
    REQUIRE(run(cmd_fit, bundled(dir, {{"data.regimes", (dir / "regimes.txt").c_str()}})) == exit_ok);
    CHECK(line_count(slurp(dir / "estimates.csv")) == 2);
}

TEST_CASE("a failing regime does not block the others")
{
    const auto dir = fresh_dir("fit_fail");
    spit(dir / "regimes.txt", "recent,2010Q1,2019Q4\ntiny,2020Q1,2020Q4\n");
    std::string err;
    CHECK(run(cmd_fit, bundled(dir, {{"data.regimes", (dir / "regimes.txt").c_str()}}), &err) == exit_input_error);
    CHECK(err.find("tiny") != std::string::npos);
    CHECK(line_count(slurp(dir / "estimates.csv")) == 2);
}

TEST_CASE("gap summary carries both samples")
{
    const auto out = fresh_dir("gap");
    REQUIRE(run(cmd_gap, bundled(out)) == exit_ok);
    const auto doc = nlohmann::json::parse(slurp(out / "summary.json"));
    for (const char* sample : {"all_quarters", "regime_quarters_only"}) {
        const auto& s = doc["gap"][sample];
        CHECK(s.contains("mean_u"));
        CHECK(s.contains("mean_u_star"));
        CHECK(s.contains("mean_gap"));
        CHECK(s["max_gap"].contains("quarter"));
        CHECK(s["min_gap"].contains("quarter"));
    }
    CHECK(doc["gap"]["all_quarters"]["quarters"] == 276);
    CHECK(line_count(slurp(out / "gap.csv")) == 277);
    const auto svg = slurp(out / "figures" / "gap.svg");
    CHECK(svg.find("<rect class=\"band\"") != std::string::npos);
}

TEST_CASE("empty panel is an input error")
{
    const auto dir = fresh_dir("empty");
    spit(dir / "u.csv", "date,value\n1900-01,5\n1900-02,5\n1900-03,5\n");
    CHECK(run(cmd_gap, bundled(dir, {{"data.unemployment", (dir / "u.csv").c_str()}})) == exit_input_error);
}

TEST_CASE("invalid zeta is a config error")
{
    const auto out = fresh_dir("bad_zeta");
    auto cfg = ConfigFile::load(BGAP_DATA_DIR "/toolkit.cfg");
    cfg.set("gap.zeta", "1.2");
    std::ostringstream err;
    CHECK(guarded([&] { return static_cast<int>(RunConfig::from_config(cfg).zetas.size()); }, err) == exit_input_error);
}

TEST_CASE("singleton zeta list reproduces the gap column")
{
    const auto out = fresh_dir("single_zeta");
    const auto rc = bundled(out, {{"sensitivity.zetas", "0.25"}});
    REQUIRE(run(cmd_gap, rc) == exit_ok);
    REQUIRE(run(cmd_sensitivity, rc) == exit_ok);

    std::istringstream gap(slurp(out / "gap.csv")), sens(slurp(out / "sensitivity.csv"));
    std::string g, s;
    std::getline(gap, g);
    std::getline(sens, s);
    CHECK(s == "quarter,u,u_star_z25");
    int rows = 0;
    while (std::getline(gap, g) && std::getline(sens, s)) {
        // gap: quarter,u,v,theta,epsilon,u_star,...
        std::vector<std::string> gc, sc;
        std::stringstream gs(g), ss(s);
        for (std::string f; std::getline(gs, f, ',');)
            gc.push_back(f);
        for (std::string f; std::getline(ss, f, ',');)
            sc.push_back(f);
        CHECK(gc[0] == sc[0]);
        CHECK(gc[5] == sc[2]);
        ++rows;
    }
    CHECK(rows == 276);
}

TEST_CASE("sensitivity band width and implied zeta output")
{
    const auto out = fresh_dir("sens");
    REQUIRE(run(cmd_sensitivity, bundled(out, {{"sensitivity.implied_zeta", "true"}})) == exit_ok);
    const auto doc = nlohmann::json::parse(slurp(out / "summary.json"));
    CHECK(doc["sensitivity"]["mean_band_width"].get<double>() < 0.015);
    CHECK(fs::exists(out / "implied_zeta.csv"));
    CHECK(fs::exists(out / "figures" / "implied_zeta.svg"));
    CHECK(doc["implied_zeta"]["min"]["value"].get<double>() < doc["implied_zeta"]["max"]["value"].get<double>());
}

TEST_CASE("simulate passes and is reproducible")
{
    const auto a = fresh_dir("sim_a"), b = fresh_dir("sim_b");
    REQUIRE(run(cmd_simulate, bundled(a)) == exit_ok);
    REQUIRE(run(cmd_simulate, bundled(b)) == exit_ok);
    for (const char* f : {"synthetic_panel.csv", "synthetic_gap.csv", "simulation.json"})
        CHECK(slurp(a / f) == slurp(b / f));
    const auto doc = nlohmann::json::parse(slurp(a / "simulation.json"));
    CHECK(doc["passed"] == true);
    CHECK(doc["oracle"]["cases"] == 81);
    CHECK(doc["comparative_statics"]["checks"].size() == 4);
}

TEST_CASE("noisy simulation is reproducible for a seed and changes with it")
{
    const auto dir = fresh_dir("sim_noise");
    spit(dir / "scenario.cfg", "[economy]\nalpha = 0.5\nmu = 0.6\ns = 0.03\nz = 0.25\nc = 0.72\n"
                               "[scenario]\nu_base = 0.05\nnoise_scale = 0.02\nshocks = " BGAP_DATA_DIR
                               "/shocks_dmp.csv\n");
    const auto scenario = (dir / "scenario.cfg").string();
    const auto a = dir / "a", b = dir / "b", c = dir / "c";
    run(cmd_simulate, bundled(a, {{"simulate.scenario", scenario.c_str()}, {"simulate.seed", "7"}}));
    run(cmd_simulate, bundled(b, {{"simulate.scenario", scenario.c_str()}, {"simulate.seed", "7"}}));
    run(cmd_simulate, bundled(c, {{"simulate.scenario", scenario.c_str()}, {"simulate.seed", "8"}}));
    CHECK(slurp(a / "synthetic_panel.csv") == slurp(b / "synthetic_panel.csv"));
    CHECK(slurp(a / "synthetic_panel.csv") != slurp(c / "synthetic_panel.csv"));
}

TEST_CASE("simulate flags a failing round trip")
{
    const auto dir = fresh_dir("sim_fail");
    // Wide separation swings bend the DMP curve away from any single isoelastic fit.
    std::string path = "quarter,s_multiplier,mu_multiplier\n";
    Quarter q{2000, 1};
    for (int t = 0; t < 20; ++t, q = q.next())
        path += q.str() + "," + std::to_string(t % 2 ? 2.5 : 0.4) + ",1\n";
    spit(dir / "shocks.csv", path);
    spit(dir / "scenario.cfg", "[economy]\nalpha = 0.5\nmu = 0.6\ns = 0.03\nz = 0.25\nc = 0.72\n"
                               "[scenario]\nu_base = 0.05\nshocks = shocks.csv\n");
    std::string err;
    CHECK(run(cmd_simulate, bundled(dir, {{"simulate.scenario", (dir / "scenario.cfg").c_str()}}), &err) ==
          exit_property_violation);
    CHECK(err.find("round trip") != std::string::npos);
}

TEST_CASE("report requires artifacts unless recomputing")
{
    const auto out = fresh_dir("report_missing");
    std::string err;
    CHECK(run(cmd_report, bundled(out), &err) == exit_input_error);
    CHECK(err.find("missing artifact") != std::string::npos);
}

TEST_CASE("report bundles the table and figures and is idempotent")
{
    const auto out = fresh_dir("report");
    REQUIRE(run(cmd_report, bundled(out, {{"output.recompute", "true"}})) == exit_ok);
    const auto first = slurp(out / "report.md");
    const auto summary = slurp(out / "summary.json");
    CHECK(count(first, "![") == 4);
    CHECK(count(first, "\n| 19") + count(first, "\n| 20") == 7);
    for (const char* fig : {"elasticities", "gap", "sensitivity", "implied_zeta"})
        CHECK(first.find(std::string("figures/") + fig + ".svg") != std::string::npos);

    REQUIRE(run(cmd_report, bundled(out)) == exit_ok);
    CHECK(slurp(out / "report.md") == first);
    CHECK(slurp(out / "summary.json") == summary);
}

TEST_CASE("recompute is deterministic")
{
    const auto a = fresh_dir("det_a"), b = fresh_dir("det_b");
    REQUIRE(run(cmd_report, bundled(a, {{"output.recompute", "true"}})) == exit_ok);
    REQUIRE(run(cmd_report, bundled(b, {{"output.recompute", "true"}})) == exit_ok);
    for (const char* f : {"panel.csv", "estimates.csv", "gap.csv", "sensitivity.csv", "implied_zeta.csv",
                          "summary.json", "report.md"})
        CHECK(slurp(a / f) == slurp(b / f));
}

TEST_CASE("per-regime kappa overrides reach the gap output")
{
    const auto dir = fresh_dir("kappa");
    spit(dir / "kappa.csv", "regime,kappa\n2010Q1-2019Q4,0.9\n");
    REQUIRE(run(cmd_gap, bundled(dir, {{"calibration.kappa_overrides", (dir / "kappa.csv").c_str()}})) == exit_ok);
    const auto base = fresh_dir("kappa_base");
    REQUIRE(run(cmd_gap, bundled(base)) == exit_ok);
    const auto with = nlohmann::json::parse(slurp(dir / "summary.json"));
    const auto without = nlohmann::json::parse(slurp(base / "summary.json"));
    CHECK(with["gap"]["all_quarters"]["mean_u_star"].get<double>() >
          without["gap"]["all_quarters"]["mean_u_star"].get<double>());
    CHECK(with["gap"]["kappa_overrides"]["2010Q1-2019Q4"] == 0.9);
}
