#include "cli/commands.hpp"

#include "bgap/error.hpp"
#include "bgap/svg.hpp"
#include "bgap/text.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace bgap::cli {

namespace {

using nlohmann::json;

constexpr const char* summary_file = "summary.json";

void write_file(const fs::path& path, const std::string& content)
{
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << content;
    if (!out)
        throw InputError("failed writing " + path.string());
}

template <class F>
void write_with(const fs::path& path, F&& emit)
{
    std::ostringstream os;
    emit(os);
    write_file(path, os.str());
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_summary(const fs::path& out)
{
    const auto path = out / summary_file;
    if (!fs::exists(path))
        return json::object();
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

// Read-modify-write of one top-level section.
void update_summary(const fs::path& out, const std::string& section, json value)
{
    auto doc = read_summary(out);
    doc[section] = std::move(value);
    write_file(out / summary_file, doc.dump(2) + "\n");
}

std::string file_label(const std::string& s)
{
    std::string r = s;
    for (char& c : r)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_'))
            c = '_';
    return r;
}

double pct(double x) { return 100.0 * x; }

json to_json(const Extremum& e) { return {{"value", e.value}, {"quarter", e.quarter.str()}}; }

json to_json(const GapSummary& s)
{
    return {{"quarters", s.quarters},
            {"mean_u", s.mean_u},
            {"mean_u_star", s.mean_u_star},
            {"mean_gap", s.mean_gap},
            {"min_gap", to_json(s.min_gap)},
            {"max_gap", to_json(s.max_gap)},
            {"slack_quarters", s.slack_quarters},
            {"tight_quarters", s.tight_quarters},
            {"efficient_quarters", s.efficient_quarters},
            {"out_of_range_quarters", s.out_of_range_quarters}};
}

json to_json(const ElasticityEstimate& e, const RegimeTable& table)
{
    json j{{"regime", e.regime},     {"epsilon", e.epsilon},     {"se", e.se_epsilon},
           {"log_v0", e.log_v0},     {"r2", e.r_squared},        {"n_obs", e.n_obs}};
    const auto regimes = table.regimes();
    if (const auto r = std::ranges::find(regimes, e.regime, &Regime::label); r != regimes.end()) {
        j["start"] = r->start.str();
        j["end"] = r->end.str();
    }
    return j;
}

json estimates_json(std::span<const ElasticityEstimate> estimates, const RegimeTable& table)
{
    json arr = json::array();
    for (const auto& e : estimates)
        arr.push_back(to_json(e, table));
    return arr;
}

void shade_recessions(svg::Plot& plot, const RunConfig& rc, double x_lo, double x_hi)
{
    if (!rc.recessions)
        return;
    for (const auto& [a, b] : load_recessions(*rc.recessions)) {
        const double x0 = a.decimal_year() - 0.125;
        const double x1 = b.decimal_year() + 0.125;
        if (x1 >= x_lo && x0 <= x_hi)
            plot.shade(std::max(x0, x_lo), std::min(x1, x_hi));
    }
}

void write_panel_outputs(const Inputs& in, const RunConfig& rc)
{
    write_with(rc.out / "panel.csv", [&](std::ostream& os) { write_panel_csv(os, in.panel); });
}

void render_fit_figure(const fs::path& path, const Inputs& in, const Regime& regime, const ElasticityEstimate& est)
{
    const auto rows = in.panel.slice(regime.start, regime.end);
    svg::Points pts{.label = "quarterly observations"};
    double lo = 1.0, hi = 0.0;
    for (const auto& r : rows) {
        pts.x.push_back(pct(r.u));
        pts.y.push_back(pct(r.v));
        lo = std::min(lo, r.u);
        hi = std::max(hi, r.u);
    }
    svg::Line fit{.label = fmt::format("fit, elasticity {:.2f}", est.epsilon), .color = "#d62728"};
    constexpr int steps = 40;
    for (int i = 0; i <= steps; ++i) {
        const double u = lo * std::pow(hi / lo, static_cast<double>(i) / steps);
        fit.x.push_back(pct(u));
        fit.y.push_back(pct(predicted_vacancy(est.log_v0, est.epsilon, u)));
    }
    svg::Plot plot("Beveridge curve " + regime.label, "unemployment rate (%, log scale)",
                   "vacancy rate (%, log scale)");
    plot.log_x().log_y().add(std::move(pts)).add(std::move(fit));
    write_with(path, [&](std::ostream& os) { plot.render(os); });
}

void render_elasticity_figure(const fs::path& path, std::span<const ElasticityEstimate> estimates,
                              const RegimeTable& table)
{
    svg::Plot plot("Beveridge elasticity by regime", "year", "elasticity");
    svg::Points pts{.label = "estimate", .color = "#1f77b4", .css_class = "est"};
    for (const auto& e : estimates) {
        const auto regimes = table.regimes();
        const auto r = std::ranges::find(regimes, e.regime, &Regime::label);
        if (r == regimes.end())
            continue;
        const double x0 = r->start.decimal_year(), x1 = r->end.decimal_year();
        pts.x.push_back(0.5 * (x0 + x1));
        pts.y.push_back(e.epsilon);
        plot.add(svg::Line{.label = "", .x = {x0, x1}, .y = {e.epsilon, e.epsilon}, .color = "#1f77b4"});
        const double mid = 0.5 * (x0 + x1), band = 1.96 * e.se_epsilon;
        plot.add(svg::Line{.label = "", .x = {mid, mid}, .y = {e.epsilon - band, e.epsilon + band}, .color = "#7f7f7f"});
    }
    plot.add(std::move(pts));
    write_with(path, [&](std::ostream& os) { plot.render(os); });
}

struct GapRun {
    Inputs inputs;
    Analysis analysis;
    std::vector<GapPoint> points;
};

GapRun run_gap(const RunConfig& rc)
{
    GapRun g{load_inputs(rc), {}, {}};
    g.analysis = analyze(g.inputs, rc);
    g.points = gap_series(g.inputs.panel, g.analysis.schedule, gap_options(g.analysis, rc, g.inputs));
    return g;
}

json summaries_json(std::span<const GapPoint> points, bool exclude_gap_quarters)
{
    json j;
    j["all_quarters"] = to_json(summarize(points, false));
    j["regime_quarters_only"] = to_json(summarize(points, true));
    j["headline"] = exclude_gap_quarters ? "regime_quarters_only" : "all_quarters";
    return j;
}

std::uint64_t resolve_seed(const RunConfig& rc, const fs::path& scenario_path)
{
    if (rc.seed)
        return *rc.seed;
    return static_cast<std::uint64_t>(ConfigFile::load(scenario_path).get_int("scenario.seed", 0));
}

std::string fmt_pp(double x) { return fmt::format("{:.2f}", pct(x)); }

} // namespace

int guarded(const std::function<int()>& body, std::ostream& err)
{
    try {
        return body();
    } catch (const PropertyViolation& e) {
        err << "property violation: " << e.what() << '\n';
        return exit_property_violation;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

int cmd_ingest(const RunConfig& rc, Streams io)
{
    const auto in = load_inputs(rc);
    write_panel_outputs(in, rc);

    const auto& p = in.panel;
    io.log << fmt::format("panel: {} quarters, {} to {}\n", p.size(), p[0].quarter.str(),
                          p[p.size() - 1].quarter.str());
    for (const auto& q : in.dropped_u)
        io.log << "dropped incomplete unemployment quarter " << q.str() << '\n';
    for (const auto& q : in.dropped_v)
        io.log << "dropped incomplete vacancy quarter " << q.str() << '\n';

    const auto& s = in.splice;
    if (s.last_pre && s.first_post)
        io.log << fmt::format("vacancy splice at {}: {} {:.3f}% (pre) -> {} {:.3f}% (post), jump {:+.3f} pp\n",
                              s.cutover.str(), s.cutover.prev().str(), pct(*s.last_pre), s.cutover.str(),
                              pct(*s.first_post), pct(*s.first_post - *s.last_pre));
    if (s.overlap_pre && s.first_post)
        io.log << fmt::format("overlap at {}: pre {:.3f}% vs post {:.3f}%, difference {:+.3f} pp\n",
                              s.cutover.str(), pct(*s.overlap_pre), pct(*s.first_post),
                              pct(*s.first_post - *s.overlap_pre));
    io.log << "wrote " << (rc.out / "panel.csv").string() << '\n';
    return exit_ok;
}

int cmd_fit(const RunConfig& rc, Streams io)
{
    const auto in = load_inputs(rc);
    const auto fit = fit_regimes(in);

    write_panel_outputs(in, rc); // scatter data behind the per-regime figures
    write_with(rc.out / "estimates.csv",
               [&](std::ostream& os) { write_estimates_csv(os, fit.estimates, in.regimes); });
    for (const auto& est : fit.estimates) {
        const auto regimes = in.regimes.regimes();
        const auto r = std::ranges::find(regimes, est.regime, &Regime::label);
        render_fit_figure(rc.out / "figures" / ("fit_" + file_label(est.regime) + ".svg"), in, *r, est);
        io.log << fmt::format("{}: elasticity {:.3f} (se {:.3f}), R2 {:.3f}, {} quarters\n", est.regime,
                              est.epsilon, est.se_epsilon, est.r_squared, est.n_obs);
    }
    render_elasticity_figure(rc.out / "figures" / "elasticities.svg", fit.estimates, in.regimes);
    update_summary(rc.out, "estimates", estimates_json(fit.estimates, in.regimes));

    for (const auto& [regime, message] : fit.failures)
        io.err << "error: regime " << regime << ": " << message << '\n';
    return fit.failures.empty() ? exit_ok : exit_input_error;
}

int cmd_gap(const RunConfig& rc, Streams io)
{
    const auto g = run_gap(rc);
    const auto& quarters = g.points;

    write_with(rc.out / "gap.csv", [&](std::ostream& os) { write_gap_csv(os, g.points); });

    svg::Line u{.label = "actual unemployment", .color = "#1f77b4"};
    svg::Line us{.label = "efficient unemployment", .color = "#d62728", .dashed = true};
    for (const auto& p : quarters) {
        const double x = p.quarter.decimal_year();
        u.x.push_back(x);
        u.y.push_back(pct(p.u));
        us.x.push_back(x);
        us.y.push_back(pct(p.u_star));
    }
    svg::Plot plot("Actual and efficient unemployment", "year", "rate (%)");
    if (!u.x.empty())
        shade_recessions(plot, rc, u.x.front(), u.x.back());
    plot.add(std::move(u)).add(std::move(us));
    write_with(rc.out / "figures" / "gap.svg", [&](std::ostream& os) { plot.render(os); });

    auto j = summaries_json(g.points, rc.exclude_gap_quarters);
    j["kappa"] = g.analysis.kappa;
    j["zeta"] = g.analysis.zeta;
    j["tolerance"] = rc.tolerance;
    if (!g.inputs.kappa_by_regime.empty())
        j["kappa_overrides"] = g.inputs.kappa_by_regime;
    update_summary(rc.out, "gap", std::move(j));
    update_summary(rc.out, "estimates", estimates_json(g.analysis.estimates, g.inputs.regimes));

    const auto s = summarize(g.points, rc.exclude_gap_quarters);
    io.log << fmt::format("mean u {}%, mean u* {}%, mean gap {} pp ({} quarters)\n", fmt_pp(s.mean_u),
                          fmt_pp(s.mean_u_star), fmt_pp(s.mean_gap), s.quarters);
    io.log << fmt::format("largest gap {} pp in {}, smallest {} pp in {}\n", fmt_pp(s.max_gap.value),
                          s.max_gap.quarter.str(), fmt_pp(s.min_gap.value), s.min_gap.quarter.str());
    if (s.out_of_range_quarters > 0)
        io.err << "warning: " << s.out_of_range_quarters << " quarters have efficient unemployment >= 100%\n";
    return exit_ok;
}

int cmd_sensitivity(const RunConfig& rc, Streams io)
{
    const auto in = load_inputs(rc);
    const auto a = analyze(in, rc);
    const auto band = sensitivity(in.panel, a.schedule, a.kappa, rc.zetas);
    SensitivityOptions opts{a.kappa, rc.baseline_zeta, rc.band_low, rc.band_high, rc.exclude_gap_quarters};
    const auto summary = summarize_sensitivity(in.panel, a.schedule, band, opts);

    write_with(rc.out / "sensitivity.csv", [&](std::ostream& os) { write_sensitivity_csv(os, band); });

    static constexpr const char* palette[] = {"#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    svg::Plot plot("Efficient unemployment by social value of nonwork", "year", "rate (%)");
    std::vector<double> years;
    for (const auto& q : band.quarters)
        years.push_back(q.decimal_year());
    if (!years.empty())
        shade_recessions(plot, rc, years.front(), years.back());
    svg::Line actual{.label = "actual unemployment", .x = years, .color = "#1f77b4"};
    for (double u : band.u)
        actual.y.push_back(pct(u));
    plot.add(std::move(actual));
    for (std::size_t z = 0; z < band.zetas.size(); ++z) {
        svg::Line l{.label = "efficient, zeta " + text::number(band.zetas[z]), .x = years,
                    .color = palette[z % std::size(palette)], .dashed = true};
        for (double v : band.u_star[z])
            l.y.push_back(pct(v));
        plot.add(std::move(l));
    }
    write_with(rc.out / "figures" / "sensitivity.svg", [&](std::ostream& os) { plot.render(os); });

    json per = json::array();
    for (const auto& z : summary.per_zeta)
        per.push_back({{"zeta", z.zeta},
                       {"mean_u_star", z.mean_u_star},
                       {"min_u_star", z.min_u_star},
                       {"max_u_star", z.max_u_star},
                       {"mean_shift", z.mean_shift}});
    json j{{"kappa", a.kappa},
           {"baseline_zeta", summary.baseline_zeta},
           {"baseline_mean_u_star", summary.baseline_mean_u_star},
           {"per_zeta", per},
           {"band_low", rc.band_low},
           {"band_high", rc.band_high},
           {"excludes_gap_quarters", rc.exclude_gap_quarters}};
    j["mean_band_width"] = summary.mean_band_width ? json(*summary.mean_band_width) : json(nullptr);
    update_summary(rc.out, "sensitivity", std::move(j));

    for (const auto& z : summary.per_zeta)
        io.log << fmt::format("zeta {}: mean u* {}%, shift {:+.2f} pp\n", text::number(z.zeta),
                              fmt_pp(z.mean_u_star), pct(z.mean_shift));
    if (summary.mean_band_width)
        io.log << fmt::format("mean band width {} pp\n", fmt_pp(*summary.mean_band_width));

    if (rc.implied_zeta) {
        const auto iz = implied_zeta_series(in.panel, a.schedule, a.kappa);
        write_with(rc.out / "implied_zeta.csv", [&](std::ostream& os) { write_implied_zeta_csv(os, iz); });
        svg::Plot zp("Social value of nonwork making tightness efficient", "year", "zeta");
        svg::Line l{.label = "implied zeta", .color = "#9467bd"};
        for (const auto& p : iz) {
            l.x.push_back(p.quarter.decimal_year());
            l.y.push_back(p.zeta_star);
        }
        if (!l.x.empty())
            shade_recessions(zp, rc, l.x.front(), l.x.back());
        zp.add(std::move(l));
        write_with(rc.out / "figures" / "implied_zeta.svg", [&](std::ostream& os) { zp.render(os); });

        const auto [lo, hi] = std::ranges::minmax_element(iz, {}, &ImpliedZetaPoint::zeta_star);
        update_summary(rc.out, "implied_zeta",
                       {{"kappa", a.kappa},
                        {"min", {{"value", lo->zeta_star}, {"quarter", lo->quarter.str()}}},
                        {"max", {{"value", hi->zeta_star}, {"quarter", hi->quarter.str()}}}});
        io.log << fmt::format("implied zeta ranges from {:.3f} ({}) to {:.3f} ({})\n", lo->zeta_star,
                              lo->quarter.str(), hi->zeta_star, hi->quarter.str());
    }
    return exit_ok;
}

int cmd_simulate(const RunConfig& rc, Streams io)
{
    if (!rc.scenario)
        throw ConfigError("no scenario configured (simulate.scenario)");
    const auto seed = resolve_seed(rc, *rc.scenario);
    const auto sc = load_scenario(*rc.scenario, seed);
    const auto& econ = sc.scenario.economy;

    const auto panel = synth_panel(sc.scenario);
    write_with(rc.out / "synthetic_panel.csv", [&](std::ostream& os) { write_panel_csv(os, panel); });

    const auto est = fit_elasticity(panel.rows(), "synthetic");
    const auto stats = dmp_stats(econ);
    const auto plan = solve_planner_numeric(econ, stats.zeta, stats.kappa);
    GapOptions go;
    go.kappa = stats.kappa;
    go.zeta = stats.zeta;
    const auto points = gap_series(panel, ElasticitySchedule::constant(panel.quarters(), est), go);
    write_with(rc.out / "synthetic_gap.csv", [&](std::ostream& os) { write_gap_csv(os, points); });

    double mean_u = 0.0;
    for (const auto& r : panel.rows())
        mean_u += r.u;
    mean_u /= static_cast<double>(panel.size());
    const double eps_theory = dmp_elasticity(econ.alpha, mean_u);

    double worst = 0.0;
    Quarter worst_q = points.front().quarter;
    for (const auto& p : points) {
        const double rel = std::abs(p.u_star / plan.u_star - 1.0);
        if (rel > worst) {
            worst = rel;
            worst_q = p.quarter;
        }
    }

    const bool noiseless = sc.scenario.noise_scale == 0.0;
    std::vector<std::string> violations;
    if (plan.at_boundary)
        violations.push_back("planner optimum at the search bracket boundary");
    if (noiseless && worst >= round_trip_tolerance)
        violations.push_back(fmt::format("round trip: u* off by {:.3e} relative at {}", worst, worst_q.str()));
    if (noiseless && std::abs(est.epsilon - eps_theory) > 0.05)
        violations.push_back(
            fmt::format("fitted elasticity {:.4f} vs steady-state value {:.4f}", est.epsilon, eps_theory));

    const auto grid = default_oracle_grid();
    const auto oracle = verify_oracle_grid(grid);
    double max_err = 0.0, max_tan = 0.0;
    for (const auto& r : oracle) {
        max_err = std::max(max_err, r.abs_error);
        max_tan = std::max(max_tan, r.tangency_residual);
        if (r.abs_error >= 1e-6 || r.tangency_residual >= 1e-6 || !r.second_order_ok || r.at_boundary)
            violations.push_back(fmt::format(
                "oracle case epsilon={} zeta={} kappa={} v0={}: error {:.3e}, tangency {:.3e}{}{}",
                r.params.epsilon, r.params.zeta, r.params.kappa, r.params.v0, r.abs_error, r.tangency_residual,
                r.second_order_ok ? "" : ", not a strict maximum", r.at_boundary ? ", at boundary" : ""));
    }

    // Comparative statics around the isoelastic curve through the planner optimum.
    PlannerBase base;
    base.curve.epsilon = est.epsilon;
    base.curve.v0 = plan.v_star * std::pow(plan.u_star, est.epsilon);
    base.zeta = stats.zeta;
    base.kappa = stats.kappa;
    const auto statics = comparative_statics_check(base, sc.perturbations);
    for (const auto& v : statics.violations())
        violations.push_back(v);

    json checks = json::array();
    for (const auto& c : statics.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"u_before", c.u_before},
                          {"u_after", c.u_after},
                          {"theta_before", c.theta_before},
                          {"theta_after", c.theta_after}});
    json report{
        {"seed", seed},
        {"economy",
         {{"alpha", econ.alpha}, {"mu", econ.mu}, {"s", econ.s}, {"p", econ.p}, {"z", econ.z}, {"c", econ.c}}},
        {"noise_scale", sc.scenario.noise_scale},
        {"quarters", panel.size()},
        {"fit", {{"epsilon", est.epsilon}, {"se", est.se_epsilon}, {"r2", est.r_squared}, {"log_v0", est.log_v0}}},
        {"steady_state_elasticity_at_mean_u", eps_theory},
        {"planner",
         {{"u_star", plan.u_star}, {"v_star", plan.v_star}, {"theta_star", plan.theta_star},
          {"at_boundary", plan.at_boundary}}},
        {"round_trip",
         {{"max_relative_error", worst}, {"quarter", worst_q.str()}, {"tolerance", round_trip_tolerance},
          {"enforced", noiseless}}},
        {"oracle", {{"cases", oracle.size()}, {"max_abs_error", max_err}, {"max_tangency_residual", max_tan}}},
        {"comparative_statics", {{"compensated_v0", statics.compensated_v0}, {"checks", checks}}},
        {"violations", violations},
        {"passed", violations.empty()}};
    write_file(rc.out / "simulation.json", report.dump(2) + "\n");

    svg::Points pts{.label = "synthetic quarters"};
    for (const auto& r : panel.rows()) {
        pts.x.push_back(pct(r.u));
        pts.y.push_back(pct(r.v));
    }
    svg::Line curve{.label = "DMP steady state", .color = "#d62728"};
    const auto [ulo, uhi] = std::ranges::minmax(pts.x);
    for (int i = 0; i <= 40; ++i) {
        const double u = (ulo + (uhi - ulo) * i / 40.0) / 100.0;
        curve.x.push_back(pct(u));
        curve.y.push_back(pct(dmp_beveridge(econ, u)));
    }
    svg::Plot plot("Synthetic Beveridge curve", "unemployment rate (%, log scale)", "vacancy rate (%, log scale)");
    plot.log_x().log_y().add(std::move(pts)).add(std::move(curve));
    write_with(rc.out / "figures" / "simulation.svg", [&](std::ostream& os) { plot.render(os); });

    io.log << fmt::format("synthetic panel: {} quarters, seed {}\n", panel.size(), seed);
    io.log << fmt::format("fitted elasticity {:.4f}, steady-state value {:.4f}\n", est.epsilon, eps_theory);
    io.log << fmt::format("planner u* {:.6f}; round-trip max relative error {:.3e}\n", plan.u_star, worst);
    io.log << fmt::format("oracle grid: {} cases, max error {:.3e}, max tangency residual {:.3e}\n", oracle.size(),
                          max_err, max_tan);
    for (const auto& v : violations)
        io.err << "violation: " << v << '\n';
    return violations.empty() ? exit_ok : exit_property_violation;
}

int cmd_report(const RunConfig& rc, Streams io)
{
    if (rc.recompute) {
        RunConfig full = rc;
        full.implied_zeta = true;
        for (auto* step : {&cmd_ingest, &cmd_fit, &cmd_gap, &cmd_sensitivity})
            if (const int code = step(full, io); code != exit_ok)
                return code;
    }

    const std::vector<fs::path> required{"estimates.csv", "gap.csv", "sensitivity.csv", summary_file,
                                         "figures/elasticities.svg", "figures/gap.svg", "figures/sensitivity.svg"};
    for (const auto& r : required)
        if (!fs::exists(rc.out / r))
            throw InputError("missing artifact " + (rc.out / r).string() + " (run the upstream command or pass --recompute)");
    const auto doc = read_summary(rc.out);
    for (const char* section : {"estimates", "gap", "sensitivity"})
        if (!doc.contains(section))
            throw InputError(std::string("summary.json lacks the '") + section + "' section");

    std::ostringstream md;
    md << "# Efficient unemployment report\n\n";

    md << "## Beveridge elasticity by regime\n\n";
    md << "| Regime | Start | End | Elasticity | s.e. | R2 | Quarters |\n";
    md << "|---|---|---|---:|---:|---:|---:|\n";
    double sum = 0.0;
    for (const auto& e : doc["estimates"]) {
        md << fmt::format("| {} | {} | {} | {:.3f} | {:.3f} | {:.3f} | {} |\n", e["regime"].get<std::string>(),
                          e.value("start", ""), e.value("end", ""), e["epsilon"].get<double>(),
                          e["se"].get<double>(), e["r2"].get<double>(), e["n_obs"].get<int>());
        sum += e["epsilon"].get<double>();
    }
    if (!doc["estimates"].empty())
        md << fmt::format("\nMean elasticity across regimes: {:.3f}.\n", sum / doc["estimates"].size());
    md << "\nPer-regime scatter plots:";
    for (const auto& e : doc["estimates"]) {
        const auto label = e["regime"].get<std::string>();
        md << fmt::format(" [{}](figures/fit_{}.svg)", label, file_label(label));
    }
    md << "\n\n![Elasticity by regime](figures/elasticities.svg)\n\n";

    const auto& gap = doc["gap"];
    md << "## Unemployment gap\n\n";
    md << fmt::format("Recruiting cost {:.3f}, social value of nonwork {:.3f}.\n\n", gap["kappa"].get<double>(),
                      gap["zeta"].get<double>());
    md << "| Sample | Quarters | Mean u (%) | Mean u* (%) | Mean gap (pp) | Largest gap (pp) | Smallest gap (pp) |\n";
    md << "|---|---:|---:|---:|---:|---:|---:|\n";
    for (const char* key : {"all_quarters", "regime_quarters_only"}) {
        const auto& s = gap[key];
        md << fmt::format("| {} | {} | {} | {} | {} | {} ({}) | {} ({}) |\n",
                          std::string(key) == "all_quarters" ? "all quarters" : "regime quarters only",
                          s["quarters"].get<int>(), fmt_pp(s["mean_u"].get<double>()),
                          fmt_pp(s["mean_u_star"].get<double>()), fmt_pp(s["mean_gap"].get<double>()),
                          fmt_pp(s["max_gap"]["value"].get<double>()), s["max_gap"]["quarter"].get<std::string>(),
                          fmt_pp(s["min_gap"]["value"].get<double>()), s["min_gap"]["quarter"].get<std::string>());
    }
    md << "\n![Actual and efficient unemployment](figures/gap.svg)\n\n";

    const auto& sens = doc["sensitivity"];
    md << "## Sensitivity to the social value of nonwork\n\n";
    md << "| zeta | Mean u* (%) | Min u* (%) | Max u* (%) | Shift vs baseline (pp) |\n";
    md << "|---:|---:|---:|---:|---:|\n";
    for (const auto& z : sens["per_zeta"])
        md << fmt::format("| {} | {} | {} | {} | {:+.2f} |\n", text::number(z["zeta"].get<double>()),
                          fmt_pp(z["mean_u_star"].get<double>()), fmt_pp(z["min_u_star"].get<double>()),
                          fmt_pp(z["max_u_star"].get<double>()), pct(z["mean_shift"].get<double>()));
    if (!sens["mean_band_width"].is_null())
        md << fmt::format("\nMean band width between zeta {} and zeta {}: {} pp.\n",
                          text::number(sens["band_low"].get<double>()), text::number(sens["band_high"].get<double>()),
                          fmt_pp(sens["mean_band_width"].get<double>()));
    md << "\n![Efficient unemployment by zeta](figures/sensitivity.svg)\n";

    if (doc.contains("implied_zeta") && fs::exists(rc.out / "figures" / "implied_zeta.svg")) {
        const auto& iz = doc["implied_zeta"];
        md << "\n## Implied social value of nonwork\n\n";
        md << fmt::format("The zeta that would make observed tightness efficient ranges from {:.3f} ({}) to {:.3f} ({}).\n",
                          iz["min"]["value"].get<double>(), iz["min"]["quarter"].get<std::string>(),
                          iz["max"]["value"].get<double>(), iz["max"]["quarter"].get<std::string>());
        md << "\n![Implied zeta](figures/implied_zeta.svg)\n";
    }

    write_file(rc.out / "report.md", md.str());
    io.log << "wrote " << (rc.out / "report.md").string() << '\n';
    return exit_ok;
}

} // namespace bgap::cli
