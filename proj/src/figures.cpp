#include "feedersim/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "feedersim/calendar.hpp"
#include "feedersim/csvio.hpp"

namespace feedersim {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 48.0;

std::string num(double v) { return format_fixed(v, 2); }

struct Rgb {
    int r, g, b;
};

std::string css(const Rgb& c) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

Rgb lerp(const Rgb& a, const Rgb& b, double t) {
    t = std::clamp(t, 0.0, 1.0);
    return {static_cast<int>(std::lround(a.r + (b.r - a.r) * t)),
            static_cast<int>(std::lround(a.g + (b.g - a.g) * t)),
            static_cast<int>(std::lround(a.b + (b.b - a.b) * t))};
}

// White to deep blue for probability-like values.
std::string sequential_color(double t) { return css(lerp({255, 255, 255}, {8, 69, 148}, t)); }

// Blue for injection, white at zero, red for offtake.
std::string diverging_color(double t) {
    if (t < 0.5) return css(lerp({33, 102, 172}, {255, 255, 255}, t * 2.0));
    return css(lerp({255, 255, 255}, {178, 24, 43}, (t - 0.5) * 2.0));
}

class Svg {
  public:
    Svg(double width, double height) : width_(width), height_(height) {
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                 "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
                 num(height) + "\">\n";
        body_ += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
                 "\" fill=\"#ffffff\"/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string& fill,
              const char* extra = "") {
        body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
                 "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"" + extra + "/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width) {
        body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                 "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                 num(width) + "\"/>\n";
    }

    void path_open(const std::string& stroke, double width, double opacity = 1.0) {
        body_ += "<path fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) +
                 "\" stroke-opacity=\"" + num(opacity) + "\" d=\"";
    }

    void path_fill_open(const std::string& fill, double opacity) {
        body_ += "<path stroke=\"none\" fill=\"" + fill + "\" fill-opacity=\"" + num(opacity) +
                 "\" d=\"";
    }

    void move_to(double x, double y) { body_ += "M" + num(x) + " " + num(y); }
    void line_to(double x, double y) { body_ += "L" + num(x) + " " + num(y); }
    void path_close_fill() { body_ += "Z\"/>\n"; }
    void path_close() { body_ += "\"/>\n"; }

    void text(double x, double y, double size, const std::string& anchor,
              const std::string& content) {
        body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\"" +
                 " font-size=\"" + num(size) + "\" text-anchor=\"" + anchor + "\" fill=\"#333333\">" +
                 content + "</text>\n";
    }

    std::string finish() {
        return body_ + "</svg>\n";
    }

    double width() const { return width_; }
    double height() const { return height_; }

  private:
    double width_;
    double height_;
    std::string body_;
};

struct Frame {
    double x0, y0, x1, y1;  // pixel corners of the plot area (y0 = top)
    double vx0, vx1;        // value range mapped onto x
    double vy0, vy1;        // value range mapped onto y (vy0 at the bottom)

    double px(double v) const { return x0 + (v - vx0) / (vx1 - vx0) * (x1 - x0); }
    double py(double v) const { return y1 - (v - vy0) / (vy1 - vy0) * (y1 - y0); }
};

void draw_frame(Svg& svg, const Frame& f, const std::string& x_label,
                const std::string& y_label) {
    svg.line(f.x0, f.y1, f.x1, f.y1, "#333333", 1.0);
    svg.line(f.x0, f.y0, f.x0, f.y1, "#333333", 1.0);
    svg.text((f.x0 + f.x1) / 2.0, f.y1 + 34.0, 13.0, "middle", x_label);
    svg.text(f.x0, f.y0 - 8.0, 13.0, "start", y_label);
    svg.text(f.x0 - 6.0, f.y1 + 4.0, 11.0, "end", format_fixed(f.vy0, 1));
    svg.text(f.x0 - 6.0, f.y0 + 4.0, 11.0, "end", format_fixed(f.vy1, 1));
    svg.text(f.x0, f.y1 + 16.0, 11.0, "middle", format_fixed(f.vx0, 0));
    svg.text(f.x1, f.y1 + 16.0, 11.0, "middle", format_fixed(f.vx1, 0));
}

void band(Svg& svg, const Frame& f, std::span<const double> xs, std::span<const double> low,
          std::span<const double> high, const std::string& fill, double opacity) {
    svg.path_fill_open(fill, opacity);
    svg.move_to(f.px(xs[0]), f.py(low[0]));
    for (std::size_t i = 1; i < xs.size(); ++i) svg.line_to(f.px(xs[i]), f.py(low[i]));
    for (std::size_t i = xs.size(); i-- > 0;) svg.line_to(f.px(xs[i]), f.py(high[i]));
    svg.path_close_fill();
}

void curve(Svg& svg, const Frame& f, std::span<const double> xs, std::span<const double> ys,
           const std::string& stroke, double width, double opacity = 1.0) {
    svg.path_open(stroke, width, opacity);
    svg.move_to(f.px(xs[0]), f.py(ys[0]));
    for (std::size_t i = 1; i < xs.size(); ++i) svg.line_to(f.px(xs[i]), f.py(ys[i]));
    svg.path_close();
}

double nice_upper(double v) {
    if (v <= 0.0) return 1.0;
    const double mag = std::pow(10.0, std::floor(std::log10(v)));
    return std::ceil(v / mag) * mag;
}

}  // namespace

std::string render_trend_svg(const SamplingReport& report, Direction direction,
                             TrendMetric metric, const std::string& title) {
    Svg svg(kWidth, kHeight);
    svg.text(kWidth / 2.0, 22.0, 15.0, "middle", title);

    std::vector<double> xs;
    std::vector<DistStats> stats;
    for (const SizeResult& size : report.sizes) {
        const DirectionResult& r = direction_result(size, direction);
        xs.push_back(static_cast<double>(size.n_connections));
        stats.push_back(metric == TrendMetric::peak_per_connection ? r.peak_per_connection
                                                                   : r.simultaneity);
    }
    if (xs.empty()) return svg.finish();

    double lo = stats[0].min;
    double hi = stats[0].max;
    for (const DistStats& s : stats) {
        lo = std::min(lo, s.min);
        hi = std::max(hi, s.max);
    }
    if (lo > 0.0) lo = 0.0;
    const double pad = 0.05 * (hi - lo + 1e-9);

    Frame f{kMarginLeft, kMarginTop, kWidth - kMarginRight, kHeight - kMarginBottom,
            xs.front(), xs.back() > xs.front() ? xs.back() : xs.front() + 1.0, lo - pad, hi + pad};

    const auto pick = [&](double DistStats::*member) {
        std::vector<double> ys;
        for (const DistStats& s : stats) ys.push_back(s.*member);
        return ys;
    };
    band(svg, f, xs, pick(&DistStats::min), pick(&DistStats::max), "#9ecae1", 0.35);
    band(svg, f, xs, pick(&DistStats::p5), pick(&DistStats::p95), "#6baed6", 0.45);
    band(svg, f, xs, pick(&DistStats::p25), pick(&DistStats::p75), "#3182bd", 0.5);
    curve(svg, f, xs, pick(&DistStats::mean), "#08306b", 1.5);
    draw_frame(svg, f, "number of connections",
               metric == TrendMetric::peak_per_connection ? "peak per connection (kW)"
                                                          : "simultaneity factor");
    return svg.finish();
}

std::string render_envelope_svg(const FeederEnvelope& e, const std::string& title) {
    Svg svg(kWidth, kHeight);
    svg.text(kWidth / 2.0, 22.0, 15.0, "middle", title);

    const std::size_t n = e.min_kw.size();
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = e.days.first + static_cast<double>(i) / kQuartersPerDay;
    }

    double lo = e.min_kw[0];
    double hi = e.max_kw[0];
    for (std::size_t i = 0; i < n; ++i) {
        lo = std::min(lo, e.min_kw[i]);
        hi = std::max(hi, e.max_kw[i]);
    }
    if (lo > 0.0) lo = 0.0;
    if (hi < 0.0) hi = 0.0;
    const double pad = 0.05 * (hi - lo + 1e-9);

    const double power_bottom = kHeight - kMarginBottom - 120.0;
    Frame f{kMarginLeft, kMarginTop, kWidth - kMarginRight, power_bottom,
            static_cast<double>(e.days.first), static_cast<double>(e.days.last + 1),
            lo - pad, hi + pad};

    band(svg, f, xs, e.min_kw, e.max_kw, "#9ecae1", 0.35);
    band(svg, f, xs, e.p5_kw, e.p95_kw, "#6baed6", 0.45);
    band(svg, f, xs, e.p25_kw, e.p75_kw, "#3182bd", 0.5);
    curve(svg, f, xs, e.median_kw, "#08306b", 1.5);
    curve(svg, f, xs, e.mean_kw, "#d95f0e", 1.0);
    if (f.vy0 < 0.0 && f.vy1 > 0.0) {
        svg.line(f.x0, f.py(0.0), f.x1, f.py(0.0), "#999999", 0.6);
    }
    draw_frame(svg, f, "day of year", "feeder load (kW)");

    // Per-day annotations: peak probability bars with the modal peak quarter
    // marked on days that carry mass.
    Frame g{kMarginLeft, power_bottom + 28.0, kWidth - kMarginRight, kHeight - kMarginBottom,
            f.vx0, f.vx1, 0.0, std::max(1e-12, *std::max_element(e.day_peak_probability.begin(),
                                                                 e.day_peak_probability.end()))};
    for (std::size_t d = 0; d < e.day_peak_probability.size(); ++d) {
        const double x = g.px(e.days.first + static_cast<double>(d));
        const double w = (g.x1 - g.x0) / static_cast<double>(e.day_peak_probability.size());
        const double p = e.day_peak_probability[d];
        if (p > 0.0) {
            svg.rect(x, g.py(p), w * 0.9, g.y1 - g.py(p), "#74c476");
        }
        if (e.day_modal_quarter[d].has_value()) {
            const double qx =
                f.px(e.days.first + static_cast<double>(d) +
                     (static_cast<double>(*e.day_modal_quarter[d]) + 0.5) / kQuartersPerDay);
            svg.line(qx, f.y0, qx, f.y0 + 8.0, "#d94801", 1.5);
        }
    }
    draw_frame(svg, g, "day of year", "P(year peak on day)");
    return svg.finish();
}

std::string render_day_histogram_svg(const PeakTimeDistribution& dist,
                                     const WeatherSeries* weather, const std::string& title) {
    Svg svg(kWidth, kHeight);
    svg.text(kWidth / 2.0, 22.0, 15.0, "middle", title);

    const std::size_t days = dist.day_histogram.size();
    const double top = *std::max_element(dist.day_histogram.begin(), dist.day_histogram.end());
    Frame f{kMarginLeft, kMarginTop, kWidth - kMarginRight,
            kHeight - kMarginBottom - (weather != nullptr ? 120.0 : 0.0),
            0.0, static_cast<double>(days), 0.0, nice_upper(top)};
    const double bar = (f.x1 - f.x0) / static_cast<double>(days);
    for (std::size_t d = 0; d < days; ++d) {
        const double p = dist.day_histogram[d];
        if (p <= 0.0) continue;
        svg.rect(f.px(static_cast<double>(d)), f.py(p), bar, f.y1 - f.py(p), "#3182bd");
    }
    draw_frame(svg, f, weather != nullptr ? "" : "day of year", "peak probability");

    if (weather != nullptr) {
        const std::vector<double> temp = daily_mean_temperature(*weather);
        std::vector<double> xs(days);
        for (std::size_t d = 0; d < days; ++d) xs[d] = static_cast<double>(d) + 0.5;
        const auto [mn, mx] = std::minmax_element(temp.begin(), temp.end());
        Frame g{kMarginLeft, f.y1 + 28.0, kWidth - kMarginRight, kHeight - kMarginBottom,
                0.0, static_cast<double>(days), *mn - 1.0, *mx + 1.0};
        curve(svg, g, xs, temp, "#cb181d", 1.2);
        if (g.vy0 < 0.0 && g.vy1 > 0.0) {
            svg.line(g.x0, g.py(0.0), g.x1, g.py(0.0), "#999999", 0.6);
        }
        draw_frame(svg, g, "day of year", "daily mean temperature (degC)");
    }
    return svg.finish();
}

std::string render_hour_day_svg(const PeakTimeDistribution& dist, const std::string& title) {
    Svg svg(kWidth, kHeight);
    svg.text(kWidth / 2.0, 22.0, 15.0, "middle", title);

    const std::size_t days = dist.day_histogram.size();
    double top = 0.0;
    for (double p : dist.hour_day) top = std::max(top, p);
    if (top <= 0.0) top = 1.0;

    Frame f{kMarginLeft, kMarginTop, kWidth - kMarginRight, kHeight - kMarginBottom,
            0.0, static_cast<double>(days), 0.0, static_cast<double>(kHoursPerDay)};
    const double cw = (f.x1 - f.x0) / static_cast<double>(days);
    const double ch = (f.y1 - f.y0) / kHoursPerDay;
    for (std::size_t d = 0; d < days; ++d) {
        for (int h = 0; h < kHoursPerDay; ++h) {
            const double p = dist.cell(static_cast<int>(d), h);
            svg.rect(f.px(static_cast<double>(d)), f.py(static_cast<double>(h + 1)), cw, ch,
                     sequential_color(p / top), " class=\"c\"");
        }
    }
    draw_frame(svg, f, "day of year", "hour of day");
    return svg.finish();
}

std::string render_histogram_svg(const Histogram& h, const std::string& title,
                                 const std::string& x_label) {
    Svg svg(kWidth, kHeight);
    svg.text(kWidth / 2.0, 22.0, 15.0, "middle", title);

    std::int64_t top = 1;
    for (std::int64_t c : h.counts) top = std::max(top, c);
    Frame f{kMarginLeft, kMarginTop, kWidth - kMarginRight, kHeight - kMarginBottom,
            h.bin_left(0), h.bin_left(h.counts.size()), 0.0, static_cast<double>(top)};
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        if (h.counts[i] <= 0) continue;
        const double x = f.px(h.bin_left(i));
        const double w = f.px(h.bin_left(i + 1)) - x;
        const double y = f.py(static_cast<double>(h.counts[i]));
        svg.rect(x, y, w * 0.95, f.y1 - y, "#3182bd");
    }
    draw_frame(svg, f, x_label, "count");
    return svg.finish();
}

std::string render_profile_panels_svg(const Profile& p, const PanelData& panels,
                                      const std::string& title) {
    const double width = 1320.0;
    const double height = 420.0;
    Svg svg(width, height);
    svg.text(width / 2.0, 22.0, 15.0, "middle", title);
    svg.text(width / 2.0, 38.0, 11.0, "middle",
             num(yearly_consumption_kwh(p)) + " kWh net over the year");

    const double panel_w = (width - 4.0 * kMarginLeft) / 3.0;
    const double y0 = kMarginTop;
    const double y1 = height - kMarginBottom;

    // Left: per-quarter-of-day envelope of the year's daily curves.
    {
        double lo = panels.env_min[0];
        double hi = panels.env_max[0];
        for (int q = 0; q < kQuartersPerDay; ++q) {
            lo = std::min(lo, panels.env_min[q]);
            hi = std::max(hi, panels.env_max[q]);
        }
        if (lo > 0.0) lo = 0.0;
        if (hi < 0.0) hi = 0.0;
        Frame f{kMarginLeft, y0, kMarginLeft + panel_w, y1, 0.0, 24.0, lo - 0.1, hi + 0.1};
        std::vector<double> xs(kQuartersPerDay);
        for (int q = 0; q < kQuartersPerDay; ++q) xs[q] = (q + 0.5) * kHoursPerQuarter;
        band(svg, f, xs, panels.env_min, panels.env_max, "#9ecae1", 0.5);
        curve(svg, f, xs, panels.env_mean, "#08306b", 1.5);
        if (f.vy0 < 0.0 && f.vy1 > 0.0) {
            svg.line(f.x0, f.py(0.0), f.x1, f.py(0.0), "#999999", 0.6);
        }
        draw_frame(svg, f, "hour of day", "power (kW)");
    }

    // Middle: day-by-quarter heatmap of the profile itself.
    {
        Frame f{2.0 * kMarginLeft + panel_w, y0, 2.0 * kMarginLeft + 2.0 * panel_w, y1,
                0.0, static_cast<double>(panels.days), 0.0, 24.0};
        float scale = 0.0f;
        for (float v : panels.heatmap) scale = std::max(scale, std::abs(v));
        if (scale <= 0.0f) scale = 1.0f;
        const double cw = (f.x1 - f.x0) / static_cast<double>(panels.days);
        const double ch = (f.y1 - f.y0) / kQuartersPerDay;
        for (int d = 0; d < panels.days; ++d) {
            for (int q = 0; q < kQuartersPerDay; ++q) {
                const float v = panels.heatmap[static_cast<std::size_t>(d) * kQuartersPerDay + q];
                const double t = 0.5 + 0.5 * static_cast<double>(v) / scale;
                svg.rect(f.px(static_cast<double>(d)), f.py((q + 1) * kHoursPerQuarter), cw, ch,
                         diverging_color(t), " class=\"c\"");
            }
        }
        draw_frame(svg, f, "day of year", "hour of day");
    }

    // Right: histogram of all quarter-hour values.
    {
        std::int64_t top = 1;
        for (std::int64_t c : panels.histogram.counts) top = std::max(top, c);
        Frame f{3.0 * kMarginLeft + 2.0 * panel_w, y0, 3.0 * kMarginLeft + 3.0 * panel_w, y1,
                panels.histogram.bin_left(0),
                panels.histogram.bin_left(panels.histogram.counts.size()), 0.0,
                static_cast<double>(top)};
        for (std::size_t i = 0; i < panels.histogram.counts.size(); ++i) {
            if (panels.histogram.counts[i] <= 0) continue;
            const double x = f.px(panels.histogram.bin_left(i));
            const double w = f.px(panels.histogram.bin_left(i + 1)) - x;
            const double y = f.py(static_cast<double>(panels.histogram.counts[i]));
            svg.rect(x, y, w * 0.95, f.y1 - y, "#3182bd");
        }
        draw_frame(svg, f, "power (kW)", "count");
    }
    return svg.finish();
}

}  // namespace feedersim
