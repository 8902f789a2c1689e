#pragma once

// SVG rendering of toric diagrams: fixed 24 px lattice pitch, dashed grid,
// solid origin dot, optional decomposition panels in the style of the
// figures (diagram = summand + summand + ...).

#include <sstream>
#include <string>
#include <vector>

#include "reebscope/polygon.hpp"

namespace reebscope {

namespace svg_detail {

constexpr int kPitch = 24;
constexpr int kMargin = 1;  // grid cells beyond the bounding box

struct Panel {
    LatticePolygon poly;
    std::string joiner;  // drawn before the panel ("=", "+", or empty)
};

inline void render_panel(std::ostringstream& out, const LatticePolygon& p, long long off_x,
                         long long off_y, long long cell_w, long long cell_h) {
    long long xmin = p.vertices()[0].x, ymin = p.vertices()[0].y;
    for (const auto& v : p.vertices()) {
        xmin = std::min(xmin, v.x);
        ymin = std::min(ymin, v.y);
    }
    xmin -= kMargin;
    ymin -= kMargin;
    auto px = [&](long long x) { return (off_x + (x - xmin)) * kPitch; };
    auto py = [&](long long y) { return (off_y + cell_h - (y - ymin)) * kPitch; };
    // dashed grid
    out << "  <g stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"4,3\">\n";
    for (long long gx = 0; gx <= cell_w; ++gx)
        out << "    <line x1=\"" << (off_x + gx) * kPitch << "\" y1=\"" << off_y * kPitch << "\" x2=\""
            << (off_x + gx) * kPitch << "\" y2=\"" << (off_y + cell_h) * kPitch << "\"/>\n";
    for (long long gy = 0; gy <= cell_h; ++gy)
        out << "    <line x1=\"" << off_x * kPitch << "\" y1=\"" << (off_y + gy) * kPitch << "\" x2=\""
            << (off_x + cell_w) * kPitch << "\" y2=\"" << (off_y + gy) * kPitch << "\"/>\n";
    out << "  </g>\n";
    // polygon (or segment)
    out << "  <polygon points=\"";
    if (p.is_segment()) {
        out << px(p.vertices()[0].x) << "," << py(p.vertices()[0].y) << " " << px(p.vertices()[1].x)
            << "," << py(p.vertices()[1].y);
    } else {
        bool first = true;
        for (const auto& v : p.vertices()) {
            if (!first) out << " ";
            first = false;
            out << px(v.x) << "," << py(v.y);
        }
    }
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    // origin dot (when the origin lies in the panel's grid)
    if (-xmin >= 0 && -xmin <= cell_w && -ymin >= 0 && -ymin <= cell_h)
        out << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"3.5\" fill=\"black\"/>\n";
}

inline std::pair<long long, long long> cell_span(const LatticePolygon& p) {
    long long xmin = p.vertices()[0].x, xmax = xmin, ymin = p.vertices()[0].y, ymax = ymin;
    for (const auto& v : p.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    return {xmax - xmin + 2 * kMargin, ymax - ymin + 2 * kMargin};
}

}  // namespace svg_detail

// one panel for the diagram, plus one panel per summand when a decomposition
// is supplied
inline std::string render_svg(const LatticePolygon& diagram,
                              const std::vector<LatticePolygon>& summands = {}) {
    using namespace svg_detail;
    std::vector<Panel> panels{{diagram, ""}};
    for (size_t i = 0; i < summands.size(); ++i) panels.push_back({summands[i], i == 0 ? "=" : "+"});
    long long total_w = 0, max_h = 0;
    std::vector<std::pair<long long, long long>> spans;
    for (const auto& pn : panels) {
        auto s = cell_span(pn.poly);
        spans.push_back(s);
        total_w += s.first + (pn.joiner.empty() ? 0 : 2);
        max_h = std::max(max_h, s.second);
    }
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (total_w + 1) * kPitch
        << "\" height=\"" << (max_h + 1) * kPitch << "\">\n";
    long long off_x = 0;
    for (size_t i = 0; i < panels.size(); ++i) {
        if (!panels[i].joiner.empty()) {
            out << "  <text x=\"" << (off_x + 1) * kPitch << "\" y=\"" << (max_h / 2 + 1) * kPitch
                << "\" font-size=\"24\" text-anchor=\"middle\">" << panels[i].joiner << "</text>\n";
            off_x += 2;
        }
        long long off_y = (max_h - spans[i].second) / 2;
        render_panel(out, panels[i].poly, off_x, off_y, spans[i].first, spans[i].second);
        off_x += spans[i].first;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace reebscope
