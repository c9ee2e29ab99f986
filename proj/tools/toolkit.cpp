#include "bgap/error.hpp"
#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

namespace {

using namespace bgap;
using namespace bgap::cli;

// Flags are applied as config overrides so that "flags win" holds uniformly.
struct Flags {
    std::string config;
    std::optional<std::string> out, unit, zeta, zetas, tolerance, seed, scenario, kappa_overrides;
    bool exclude_gap_quarters = false;
    bool implied_zeta = false;
    bool recompute = false;
    std::vector<std::string> sets;
};

void add_options(CLI::App& sub, Flags& f)
{
    sub.add_option("--config", f.config, "run configuration file")->required();
    sub.add_option("--out", f.out, "output directory");
    sub.add_option("--unit", f.unit, "input unit: fraction or percent");
    sub.add_option("--zeta", f.zeta, "social value of nonwork for the gap command");
    sub.add_option("--zetas", f.zetas, "comma-separated zeta list for the sensitivity command");
    sub.add_option("--tolerance", f.tolerance, "relative tolerance for the efficient classification");
    sub.add_option("--seed", f.seed, "simulation seed");
    sub.add_option("--scenario", f.scenario, "scenario file for the simulate command");
    sub.add_option("--kappa-overrides", f.kappa_overrides, "per-regime recruiting cost file (regime,kappa)");
    sub.add_flag("--exclude-gap-quarters", f.exclude_gap_quarters, "headline summaries skip gap quarters");
    sub.add_flag("--implied-zeta", f.implied_zeta, "also emit the implied zeta series");
    sub.add_flag("--recompute", f.recompute, "rerun upstream commands before reporting");
    sub.add_option("--set", f.sets, "override any config key: section.key=value");
}

RunConfig resolve(const Flags& f)
{
    auto cfg = ConfigFile::load(f.config);
    const auto cwd = std::filesystem::current_path();

    if (const char* env = std::getenv("TOOLKIT_SEED"); env && *env)
        cfg.set("simulate.seed", env, cwd);

    for (const auto& s : f.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("--set expects section.key=value, got '" + s + "'");
        cfg.set(s.substr(0, eq), s.substr(eq + 1), cwd);
    }

    const std::map<std::string, const std::optional<std::string>*> direct{
        {"output.out", &f.out},          {"data.unit", &f.unit},
        {"gap.zeta", &f.zeta},           {"sensitivity.zetas", &f.zetas},
        {"gap.tolerance", &f.tolerance}, {"simulate.seed", &f.seed},
        {"simulate.scenario", &f.scenario}, {"calibration.kappa_overrides", &f.kappa_overrides}};
    for (const auto& [key, value] : direct)
        if (*value)
            cfg.set(key, **value, cwd);
    if (f.exclude_gap_quarters)
        cfg.set("gap.exclude_gap_quarters", "true");
    if (f.implied_zeta)
        cfg.set("sensitivity.implied_zeta", "true");
    if (f.recompute)
        cfg.set("output.recompute", "true");
    return RunConfig::from_config(cfg);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Efficient unemployment toolkit"};
    app.require_subcommand(1);
    Flags flags;

    using Command = int (*)(const RunConfig&, Streams);
    const std::vector<std::pair<std::string, std::pair<std::string, Command>>> commands{
        {"ingest", {"build the quarterly panel and audit the vacancy splice", &cmd_ingest}},
        {"fit", {"estimate the Beveridge elasticity per regime", &cmd_fit}},
        {"gap", {"compute efficient unemployment and the gap", &cmd_gap}},
        {"sensitivity", {"efficient unemployment across zeta values", &cmd_sensitivity}},
        {"simulate", {"synthetic DMP panel with round-trip and oracle checks", &cmd_simulate}},
        {"report", {"assemble report.md from existing artifacts", &cmd_report}},
    };
    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const auto& [name, info] : commands) {
        auto* sub = app.add_subcommand(name, info.first);
        add_options(*sub, flags);
        subs.emplace_back(sub, info.second);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    Streams io{std::cout, std::cerr};
    return guarded(
        [&] {
            const auto rc = resolve(flags);
            for (const auto& [sub, command] : subs)
                if (sub->parsed())
                    return command(rc, io);
            return static_cast<int>(exit_input_error);
        },
        std::cerr);
}
