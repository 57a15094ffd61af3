#include "evacsim/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace evacsim {

namespace {

// Fixed 10-color palette, cycled across curves.
constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};
constexpr int kPaletteSize = 10;

constexpr int kWidth = 960;
constexpr int kHeight = 560;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 50;
constexpr int kMarginBottom = 60;

// Fixed-precision formatting keeps the output byte-deterministic.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render_survival_svg(const std::vector<SurvivalCurve>& curves,
                                const std::string& title) {
    if (curves.empty()) {
        throw std::invalid_argument("render_survival_svg: at least one curve required");
    }

    int max_step = 1;
    int max_remaining = 1;
    for (const SurvivalCurve& c : curves) {
        for (const TraceRow& row : c.rows) {
            max_step = std::max(max_step, row.step);
            max_remaining = std::max(max_remaining, row.remaining_total);
        }
    }

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto map_x = [&](double step) {
        return kMarginLeft + step / max_step * plot_w;
    };
    auto map_y = [&](double remaining) {
        return kMarginTop + plot_h - remaining / max_remaining * plot_h;
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n"
        << "<style>text{font-family:Helvetica,Arial,sans-serif;font-size:12px;fill:#000;}"
        << ".title{font-size:15px;font-weight:bold;}</style>\n";

    out << "<text class=\"title\" x=\"" << kWidth / 2
        << "\" y=\"24\" text-anchor=\"middle\">" << escape_xml(title) << "</text>\n";

    // Grid and tick labels.
    const int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double step = static_cast<double>(max_step) * i / ticks;
        const double x = map_x(step);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << kMarginTop << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << fmt(kMarginTop + plot_h) << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kMarginTop + plot_h + 18)
            << "\" text-anchor=\"middle\">" << static_cast<long>(step + 0.5) << "</text>\n";
    }
    for (int i = 0; i <= ticks; ++i) {
        const double remaining = static_cast<double>(max_remaining) * i / ticks;
        const double y = map_y(remaining);
        out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(kMarginLeft + plot_w) << "\" y2=\"" << fmt(y) << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\">" << static_cast<long>(remaining + 0.5) << "</text>\n";
    }

    // Axes and labels.
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << fmt(kMarginTop + plot_h)
        << "\" x2=\"" << fmt(kMarginLeft + plot_w) << "\" y2=\"" << fmt(kMarginTop + plot_h)
        << "\" stroke=\"#000\"/>\n";
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
        << kMarginLeft << "\" y2=\"" << fmt(kMarginTop + plot_h) << "\" stroke=\"#000\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16
        << "\" text-anchor=\"middle\">step</text>\n";
    out << "<text x=\"20\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << kHeight / 2
        << ")\">remaining agents</text>\n";

    for (std::size_t c = 0; c < curves.size(); ++c) {
        const char* color = kPalette[c % kPaletteSize];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (const TraceRow& row : curves[c].rows) {
            out << fmt(map_x(row.step)) << ',' << fmt(map_y(row.remaining_total)) << ' ';
        }
        out << "\"/>\n";
    }

    // Legend, top right of the plot area.
    const double legend_x = kMarginLeft + plot_w - 190;
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const double y = kMarginTop + 14 + 16.0 * c;
        out << "<line x1=\"" << fmt(legend_x) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(legend_x + 22) << "\" y2=\"" << fmt(y) << "\" stroke=\""
            << kPalette[c % kPaletteSize] << "\" stroke-width=\"2.5\"/>\n";
        out << "<text x=\"" << fmt(legend_x + 28) << "\" y=\"" << fmt(y + 4) << "\">"
            << escape_xml(curves[c].label) << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace evacsim
