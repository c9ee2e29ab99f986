#include "cli/pipeline.hpp"

#include "bgap/error.hpp"
#include "bgap/text.hpp"

#include <algorithm>
#include <fstream>

namespace bgap::cli {

namespace {

fs::path required_path(const ConfigFile& cfg, const std::string& key)
{
    const auto p = cfg.get_path(key);
    if (!p)
        throw ConfigError("missing config key " + key);
    return *p;
}

std::ifstream open_input(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path.string());
    return in;
}

template <class F>
auto with_file_context(const fs::path& path, F&& f)
{
    try {
        return f();
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

QuarterlySeries load_quarterly(const fs::path& path, ValueUnit unit)
{
    auto in = open_input(path);
    return with_file_context(path, [&] { return to_quarterly(parse_series_csv(in, unit)); });
}

std::optional<double> value_at(const std::vector<QuarterlyPoint>& series, const Quarter& q)
{
    const auto it = std::ranges::find(series, q, &QuarterlyPoint::quarter);
    if (it == series.end())
        return std::nullopt;
    return it->value;
}

} // namespace

RunConfig RunConfig::from_config(const ConfigFile& cfg)
{
    RunConfig rc;
    rc.u_series = required_path(cfg, "data.unemployment");
    rc.v_pre = required_path(cfg, "data.vacancy_pre");
    rc.v_post = required_path(cfg, "data.vacancy_post");
    rc.cutover = Quarter::parse(cfg.get_string("data.cutover", "2001Q1"));
    rc.unit = parse_unit(cfg.get_string("data.unit", "percent"));
    rc.regimes = cfg.get_path("data.regimes");
    rc.recessions = cfg.get_path("data.recessions");
    rc.calibration = cfg.get_path("calibration.profile");
    rc.kappa_overrides = cfg.get_path("calibration.kappa_overrides");
    if (cfg.has("gap.zeta"))
        rc.zeta = cfg.get_double("gap.zeta", 0.25);
    rc.tolerance = cfg.get_double("gap.tolerance", rc.tolerance);
    rc.exclude_gap_quarters = cfg.get_bool("gap.exclude_gap_quarters", rc.exclude_gap_quarters);
    rc.zetas = cfg.get_doubles("sensitivity.zetas", rc.zetas);
    rc.baseline_zeta = cfg.get_double("sensitivity.baseline", rc.baseline_zeta);
    rc.band_low = cfg.get_double("sensitivity.band_low", rc.band_low);
    rc.band_high = cfg.get_double("sensitivity.band_high", rc.band_high);
    rc.implied_zeta = cfg.get_bool("sensitivity.implied_zeta", rc.implied_zeta);
    rc.scenario = cfg.get_path("simulate.scenario");
    if (cfg.has("simulate.seed"))
        rc.seed = static_cast<std::uint64_t>(cfg.get_int("simulate.seed", 0));
    rc.out = cfg.get_path("output.out").value_or("out");
    rc.recompute = cfg.get_bool("output.recompute", false);

    if (rc.zeta && !(*rc.zeta < 1.0))
        throw ConfigError("zeta must be below 1");
    for (double z : rc.zetas)
        if (!(z < 1.0))
            throw ConfigError("every sensitivity zeta must be below 1");
    if (!(rc.tolerance >= 0.0 && rc.tolerance < 1.0))
        throw ConfigError("tolerance must lie in [0,1)");
    return rc;
}

Inputs load_inputs(const RunConfig& rc)
{
    Inputs in;
    const auto u = load_quarterly(rc.u_series, rc.unit);
    const auto pre = load_quarterly(rc.v_pre, rc.unit);
    const auto post = load_quarterly(rc.v_post, rc.unit);
    in.dropped_u = u.dropped;
    in.dropped_v = pre.dropped;
    in.dropped_v.insert(in.dropped_v.end(), post.dropped.begin(), post.dropped.end());

    const auto v = splice_vacancy(pre.points, post.points, rc.cutover);
    in.splice.cutover = rc.cutover;
    in.splice.last_pre = value_at(pre.points, rc.cutover.prev());
    in.splice.first_post = value_at(post.points, rc.cutover);
    in.splice.overlap_pre = value_at(pre.points, rc.cutover);

    in.panel = build_panel(u.points, v);

    if (rc.regimes) {
        auto f = open_input(*rc.regimes);
        in.regimes = with_file_context(*rc.regimes, [&] { return RegimeTable::parse(f); });
    } else {
        in.regimes = RegimeTable::us_default();
    }

    if (rc.calibration)
        in.calibration = with_file_context(
            *rc.calibration, [&] { return CalibrationProfile::from_config(ConfigFile::load(*rc.calibration)); });

    if (rc.kappa_overrides)
        in.kappa_by_regime = load_kappa_overrides(*rc.kappa_overrides);
    return in;
}

FitOutcome fit_regimes(const Inputs& in)
{
    FitOutcome out;
    for (const auto& r : in.regimes.regimes()) {
        try {
            out.estimates.push_back(fit_elasticity(in.panel.slice(r.start, r.end), r.label));
        } catch (const InputError& e) {
            out.failures.emplace_back(r.label, e.what());
        }
    }
    return out;
}

Analysis analyze(const Inputs& in, const RunConfig& rc)
{
    Analysis a;
    a.estimates = fit_all(in.panel, in.regimes);
    const auto quarters = in.panel.quarters();
    a.schedule = build_schedule(in.regimes, a.estimates, quarters);
    a.kappa = in.calibration.kappa();
    a.zeta = rc.zeta.value_or(in.calibration.zeta);
    return a;
}

GapOptions gap_options(const Analysis& a, const RunConfig& rc, const Inputs& in)
{
    GapOptions o;
    o.kappa = a.kappa;
    o.zeta = a.zeta;
    o.tolerance = rc.tolerance;
    o.kappa_by_regime = in.kappa_by_regime;
    return o;
}

std::vector<std::pair<Quarter, Quarter>> load_recessions(const fs::path& path)
{
    auto in = open_input(path);
    std::vector<std::pair<Quarter, Quarter>> out;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = text::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto cols = text::split(t, ',');
        if (!header_seen) {
            header_seen = true;
            if (cols.size() == 2 && cols[0] == "start" && cols[1] == "end")
                continue;
        }
        const auto a = cols.size() == 2 ? Quarter::try_parse(cols[0]) : std::nullopt;
        const auto b = cols.size() == 2 ? Quarter::try_parse(cols[1]) : std::nullopt;
        if (!a || !b || *b < *a)
            throw ParseError(path.string() + ": expected 'start,end' quarters", lineno);
        out.emplace_back(*a, *b);
    }
    return out;
}

std::map<std::string, double> load_kappa_overrides(const fs::path& path)
{
    auto in = open_input(path);
    std::map<std::string, double> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = text::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto cols = text::split(t, ',');
        double k = 0.0;
        if (cols.size() != 2 || cols[0] == "regime")
            continue;
        if (!text::parse_double(cols[1], k) || !(k > 0.0))
            throw ParseError(path.string() + ": expected 'regime,kappa' with kappa > 0", lineno);
        out[std::string(cols[0])] = k;
    }
    return out;
}

ScenarioConfig load_scenario(const fs::path& path, std::optional<std::uint64_t> seed_override)
{
    const auto cfg = ConfigFile::load(path);
    ScenarioConfig sc;
    auto& e = sc.scenario.economy;
    e.alpha = cfg.get_double("economy.alpha", e.alpha);
    e.mu = cfg.get_double("economy.mu", e.mu);
    e.s = cfg.get_double("economy.s", e.s);
    e.p = cfg.get_double("economy.p", e.p);
    e.z = cfg.get_double("economy.z", e.z);
    e.c = cfg.get_double("economy.c", e.c);
    e.labor_force = cfg.get_double("economy.labor_force", e.labor_force);
    with_file_context(path, [&] {
        e.validate();
        return 0;
    });

    sc.scenario.u_base = cfg.get_double("scenario.u_base", sc.scenario.u_base);
    sc.scenario.noise_scale = cfg.get_double("scenario.noise_scale", sc.scenario.noise_scale);
    sc.scenario.seed = seed_override.value_or(static_cast<std::uint64_t>(cfg.get_int("scenario.seed", 0)));
    const auto shocks = cfg.get_path("scenario.shocks");
    if (!shocks)
        throw ConfigError(path.string() + ": missing scenario.shocks");
    auto f = open_input(*shocks);
    sc.scenario.shocks = with_file_context(*shocks, [&] { return parse_shock_path(f); });

    auto& p = sc.perturbations;
    p.kappa_step = cfg.get_double("perturbations.kappa_step", p.kappa_step);
    p.zeta_step = cfg.get_double("perturbations.zeta_step", p.zeta_step);
    p.v0_factor = cfg.get_double("perturbations.v0_factor", p.v0_factor);
    p.epsilon_step = cfg.get_double("perturbations.epsilon_step", p.epsilon_step);
    return sc;
}

} // namespace bgap::cli
