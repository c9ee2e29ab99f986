#include "bgap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>

namespace bgap::svg {

namespace {

constexpr int margin_left = 70, margin_right = 160, margin_top = 40, margin_bottom = 50;

std::vector<double> nice_ticks(double lo, double hi, int target = 6)
{
    const double span = hi - lo;
    if (!(span > 0.0))
        return {lo};
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step)
        ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    return ticks;
}

std::vector<double> log_ticks(double lo, double hi)
{
    std::vector<double> ticks;
    for (int e = static_cast<int>(std::floor(std::log10(lo))); e <= static_cast<int>(std::ceil(std::log10(hi))); ++e)
        for (double m : {1.0, 2.0, 5.0}) {
            const double t = m * std::pow(10.0, e);
            if (t >= lo && t <= hi)
                ticks.push_back(t);
        }
    if (ticks.size() < 3) {
        // Narrow range: fall back to evenly spaced labels in value space.
        ticks = nice_ticks(lo, hi, 4);
        std::erase_if(ticks, [](double t) { return !(t > 0.0); });
    }
    return ticks;
}

std::string tick_label(double t)
{
    return fmt::format("{:g}", t);
}

} // namespace

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

Plot::Plot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label))
{
}

Plot& Plot::add(Line line)
{
    lines_.push_back(std::move(line));
    return *this;
}

Plot& Plot::add(Points points)
{
    points_.push_back(std::move(points));
    return *this;
}

Plot& Plot::shade(double x0, double x1)
{
    bands_.emplace_back(x0, x1);
    return *this;
}

Plot::Range Plot::x_range() const
{
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    auto visit = [&](const std::vector<double>& xs) {
        for (double x : xs)
            if (std::isfinite(x) && (!log_x_ || x > 0.0)) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
    };
    for (const auto& l : lines_)
        visit(l.x);
    for (const auto& p : points_)
        visit(p.x);
    if (!std::isfinite(lo))
        return {0.0, 1.0};
    if (hi == lo)
        return log_x_ ? Range{lo / 1.1, hi * 1.1} : Range{lo - 0.5, hi + 0.5};
    return {lo, hi};
}

Plot::Range Plot::y_range() const
{
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    auto visit = [&](const std::vector<double>& ys) {
        for (double y : ys)
            if (std::isfinite(y) && (!log_y_ || y > 0.0)) {
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
    };
    for (const auto& l : lines_)
        visit(l.y);
    for (const auto& p : points_)
        visit(p.y);
    if (!std::isfinite(lo))
        return {0.0, 1.0};
    if (log_y_)
        return hi == lo ? Range{lo / 1.1, hi * 1.1} : Range{lo / 1.05, hi * 1.05};
    const double pad = hi == lo ? 0.5 : 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

void Plot::render(std::ostream& out) const
{
    const auto xr = x_range();
    const auto yr = y_range();
    const double pw = width_ - margin_left - margin_right;
    const double ph = height_ - margin_top - margin_bottom;

    auto tx = [&](double x) {
        const double t = log_x_ ? (std::log(x) - std::log(xr.lo)) / (std::log(xr.hi) - std::log(xr.lo))
                                : (x - xr.lo) / (xr.hi - xr.lo);
        return margin_left + t * pw;
    };
    auto ty = [&](double y) {
        const double t = log_y_ ? (std::log(y) - std::log(yr.lo)) / (std::log(yr.hi) - std::log(yr.lo))
                                : (y - yr.lo) / (yr.hi - yr.lo);
        return margin_top + (1.0 - t) * ph;
    };
    auto visible_x = [&](double x) { return std::isfinite(x) && (!log_x_ || x > 0.0); };
    auto visible_y = [&](double y) { return std::isfinite(y) && (!log_y_ || y > 0.0); };

    out << fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}" )"
                       R"(font-family="sans-serif" font-size="12">)"
                       "\n",
                       width_, height_, width_, height_);
    out << fmt::format(R"(<rect x="0" y="0" width="{}" height="{}" fill="white"/>)"
                       "\n",
                       width_, height_);
    out << fmt::format(R"(<text x="{}" y="22" text-anchor="middle" font-size="15">{}</text>)"
                       "\n",
                       margin_left + pw / 2, escape(title_));

    for (const auto& [x0, x1] : bands_) {
        const double a = std::clamp(tx(std::max(x0, xr.lo)), double(margin_left), margin_left + pw);
        const double b = std::clamp(tx(std::min(x1, xr.hi)), double(margin_left), margin_left + pw);
        if (b > a)
            out << fmt::format(R"(<rect class="band" x="{:.2f}" y="{}" width="{:.2f}" height="{:.2f}" fill="#dddddd"/>)"
                               "\n",
                               a, margin_top, b - a, ph);
    }

    // Axes and ticks.
    out << fmt::format(R"(<g stroke="black" fill="none"><rect x="{}" y="{}" width="{:.2f}" height="{:.2f}"/></g>)"
                       "\n",
                       margin_left, margin_top, pw, ph);
    const auto xt = log_x_ ? log_ticks(xr.lo, xr.hi) : nice_ticks(xr.lo, xr.hi);
    for (double t : xt) {
        const double x = tx(t);
        out << fmt::format(R"(<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="black"/>)"
                           R"(<text x="{:.2f}" y="{:.2f}" text-anchor="middle">{}</text>)"
                           "\n",
                           x, margin_top + ph, x, margin_top + ph + 5, x, margin_top + ph + 18, tick_label(t));
    }
    const auto yt = log_y_ ? log_ticks(yr.lo, yr.hi) : nice_ticks(yr.lo, yr.hi);
    for (double t : yt) {
        const double y = ty(t);
        out << fmt::format(R"(<line x1="{}" y1="{:.2f}" x2="{}" y2="{:.2f}" stroke="black"/>)"
                           R"(<text x="{}" y="{:.2f}" text-anchor="end">{}</text>)"
                           "\n",
                           margin_left - 5, y, margin_left, y, margin_left - 8, y + 4, tick_label(t));
    }
    out << fmt::format(R"(<text x="{:.2f}" y="{}" text-anchor="middle">{}</text>)"
                       "\n",
                       margin_left + pw / 2, height_ - 12, escape(x_label_));
    out << fmt::format(R"svg(<text x="16" y="{:.2f}" text-anchor="middle" transform="rotate(-90 16 {:.2f})">{}</text>)svg"
                       "\n",
                       margin_top + ph / 2, margin_top + ph / 2, escape(y_label_));

    for (const auto& l : lines_) {
        std::string path;
        bool pen_down = false;
        for (std::size_t i = 0; i < l.x.size() && i < l.y.size(); ++i) {
            if (!visible_x(l.x[i]) || !visible_y(l.y[i])) {
                pen_down = false;
                continue;
            }
            path += fmt::format("{}{:.2f},{:.2f} ", pen_down ? "L" : "M", tx(l.x[i]), ty(l.y[i]));
            pen_down = true;
        }
        out << fmt::format(R"(<path class="series" d="{}" fill="none" stroke="{}" stroke-width="1.6"{}/>)"
                           "\n",
                           path, l.color, l.dashed ? R"( stroke-dasharray="5,3")" : "");
    }
    for (const auto& p : points_) {
        for (std::size_t i = 0; i < p.x.size() && i < p.y.size(); ++i) {
            if (!visible_x(p.x[i]) || !visible_y(p.y[i]))
                continue;
            out << fmt::format(R"(<circle class="{}" cx="{:.2f}" cy="{:.2f}" r="3" fill="{}"/>)"
                               "\n",
                               p.css_class, tx(p.x[i]), ty(p.y[i]), p.color);
        }
    }

    // Legend.
    double ly = margin_top + 10;
    const double lx = margin_left + pw + 12;
    auto legend = [&](const std::string& label, const std::string& color, bool dot) {
        if (label.empty())
            return;
        if (dot)
            out << fmt::format(R"(<circle cx="{:.2f}" cy="{:.2f}" r="4" fill="{}"/>)", lx + 8, ly - 4, color);
        else
            out << fmt::format(R"(<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="{}" stroke-width="2"/>)",
                               lx, ly - 4, lx + 16, ly - 4, color);
        out << fmt::format(R"(<text x="{:.2f}" y="{:.2f}">{}</text>)"
                           "\n",
                           lx + 22, ly, escape(label));
        ly += 18;
    };
    for (const auto& l : lines_)
        legend(l.label, l.color, false);
    for (const auto& p : points_)
        legend(p.label, p.color, true);

    out << "</svg>\n";
}

} // namespace bgap::svg
