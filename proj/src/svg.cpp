#include "lsc/svg.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace lsc {

namespace {

struct Frame {
    double x0, y1, scale, margin;
    double x(const Rational& v) const { return margin + (v.get_d() - x0) * scale; }
    double y(const Rational& v) const { return margin + (y1 - v.get_d()) * scale; }
};

}  // namespace

std::string render_svg(const Arrangement& arr, const Cover* chosen, const SvgOptions& options) {
    double x0 = std::numeric_limits<double>::max(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& p : arr.vertices()) {
        x0 = std::min(x0, p.x.get_d());
        x1 = std::max(x1, p.x.get_d());
        y0 = std::min(y0, p.y.get_d());
        y1 = std::max(y1, p.y.get_d());
    }
    if (arr.vertices().empty()) x0 = y0 = 0, x1 = y1 = 1;
    double span = std::max({x1 - x0, y1 - y0, 1e-9});
    double inner = options.width - 2 * options.margin;
    Frame f{x0, y1, inner / span, options.margin};
    double height = (y1 - y0) * f.scale + 2 * options.margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << options.width << ' ' << height << "\">\n";
    out << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#4a7\" "
           "stroke-width=\"2\"/></pattern></defs>\n";

    if (options.shade_cells) {
        for (const Cell& c : arr.cells()) {
            if (!c.bounded) continue;
            out << "<path fill-rule=\"evenodd\" fill=\"" << (c.rectangular ? "url(#hatch)" : "#dde6f0")
                << "\" stroke=\"none\" data-cell=\"" << c.id << "\" d=\"";
            for (int h : c.boundary) {
                auto poly = arr.cycle_points(h);
                for (std::size_t i = 0; i < poly.size(); ++i)
                    out << (i == 0 ? 'M' : 'L') << f.x(poly[i].x) << ' ' << f.y(poly[i].y) << ' ';
                out << "Z ";
            }
            out << "\"/>\n";
        }
    }

    std::set<int> red;
    if (chosen) red.insert(chosen->chosen.begin(), chosen->chosen.end());
    for (const auto& s : arr.instance().segments()) {
        bool hot = red.count(s.id) > 0;
        out << "<line x1=\"" << f.x(s.a.x) << "\" y1=\"" << f.y(s.a.y) << "\" x2=\"" << f.x(s.b.x) << "\" y2=\""
            << f.y(s.b.y) << "\" stroke=\"" << (hot ? "#d22" : "#000") << "\" stroke-width=\"" << (hot ? 3 : 1.5)
            << "\" data-segment=\"" << s.id << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace lsc
