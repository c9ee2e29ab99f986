#ifndef BGAP_SVG_HPP
#define BGAP_SVG_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bgap::svg {

struct Line {
    std::string label;
    std::vector<double> x{};
    std::vector<double> y{};
    std::string color = "#1f77b4";
    bool dashed = false;
};

struct Points {
    std::string label;
    std::vector<double> x{};
    std::vector<double> y{};
    std::string color = "#1f77b4";
    std::string css_class = "obs"; // each point is one <circle class="..."/>
};

/// Minimal 2D plot: lines, scatter points, vertical shaded bands, optional
/// log axes. Output is a standalone SVG document.
class Plot {
public:
    Plot(std::string title, std::string x_label, std::string y_label);

    Plot& log_x(bool on = true) { log_x_ = on; return *this; }
    Plot& log_y(bool on = true) { log_y_ = on; return *this; }
    Plot& size(int width, int height) { width_ = width; height_ = height; return *this; }

    Plot& add(Line line);
    Plot& add(Points points);
    Plot& shade(double x0, double x1);

    void render(std::ostream& out) const;

private:
    struct Range {
        double lo, hi;
    };
    Range x_range() const;
    Range y_range() const;

    std::string title_, x_label_, y_label_;
    bool log_x_ = false, log_y_ = false;
    int width_ = 720, height_ = 440;
    std::vector<Line> lines_;
    std::vector<Points> points_;
    std::vector<std::pair<double, double>> bands_;
};

std::string escape(const std::string& s);

} // namespace bgap::svg

#endif
