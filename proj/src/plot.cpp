#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ifield/dynamics.hpp"

namespace ifield {

namespace {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> pts;
};

void emit_panel(std::ostringstream& os, const Series& s, double ox, double oy,
                double w, double h) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (auto& [x, y] : s.pts) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax - xmin < 1e-12) xmax = xmin + 1;
    if (ymax - ymin < 1e-12) ymax = ymin + 1;
    auto px = [&](double x) { return ox + (x - xmin) / (xmax - xmin) * w; };
    auto py = [&](double y) { return oy + h - (y - ymin) / (ymax - ymin) * h; };
    os << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << w
       << "\" height=\"" << h << "\" fill=\"none\" stroke=\"#888\"/>\n";
    os << "<text x=\"" << ox + 4 << "\" y=\"" << oy + 14
       << "\" font-size=\"12\" fill=\"#333\">" << s.label << "</text>\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.3g, %.3g] x [%.3g, %.3g]", xmin, xmax, ymin,
                  ymax);
    os << "<text x=\"" << ox + 4 << "\" y=\"" << oy + h - 4
       << "\" font-size=\"9\" fill=\"#666\">" << buf << "</text>\n";
    os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"0.6\" points=\"";
    size_t stride = std::max<size_t>(1, s.pts.size() / 4000);
    for (size_t i = 0; i < s.pts.size(); i += stride)
        os << px(s.pts[i].first) << "," << py(s.pts[i].second) << " ";
    os << "\"/>\n";
}

}  // namespace

std::string trajectory_svg(const Trajectory& traj) {
    Series xy{"x-y", {}}, xz{"x-z", {}}, tz{"t-z", {}};
    for (auto& s : traj.samples) {
        xy.pts.emplace_back(s.q[0], s.q[1]);
        xz.pts.emplace_back(s.q[0], s.q[2]);
        tz.pts.emplace_back(s.t, s.q[2]);
    }
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"320\" "
          "viewBox=\"0 0 960 320\">\n";
    emit_panel(os, xy, 10, 10, 300, 300);
    emit_panel(os, xz, 330, 10, 300, 300);
    emit_panel(os, tz, 650, 10, 300, 300);
    os << "</svg>\n";
    return os.str();
}

std::string trajectory_gnuplot(const Trajectory& traj) {
    std::ostringstream os;
    os << "# gnuplot 3D data block: splot '-' using 1:2:3 with lines\n";
    os << "# columns: x y z t\n";
    char buf[256];
    for (auto& s : traj.samples) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n", s.q[0], s.q[1],
                      s.q[2], s.t);
        os << buf;
    }
    os << "e\n";
    return os.str();
}

}  // namespace ifield
