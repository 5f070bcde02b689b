#include "quadlab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quadlab {

namespace {

constexpr double kCanvas = 240.0;
constexpr double kRadius = 100.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Unit-circle coordinates to canvas coordinates (y grows downward).
std::pair<double, double> to_canvas(double theta) {
  return {kCanvas / 2 + kRadius * std::cos(theta), kCanvas / 2 - kRadius * std::sin(theta)};
}

}  // namespace

std::string render_svg(const CircleQuad& q, std::string_view caption) {
  std::array<std::pair<double, double>, 4> p;
  double theta = q.theta0();
  for (std::size_t i = 0; i < 4; ++i) {
    p[i] = to_canvas(theta);
    theta += q.arcs()[i];
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas + 30
     << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas + 30 << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <circle cx=\"" << fmt(kCanvas / 2) << "\" cy=\"" << fmt(kCanvas / 2) << "\" r=\"" << fmt(kRadius)
     << "\" fill=\"none\" stroke=\"#999\"/>\n";
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < 4; ++i) os << (i ? " " : "") << fmt(p[i].first) << ',' << fmt(p[i].second);
  os << "\" fill=\"#cde\" fill-opacity=\"0.5\" stroke=\"#124\" stroke-width=\"1.5\"/>\n";
  for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 3}}) {
    os << "  <line x1=\"" << fmt(p[i].first) << "\" y1=\"" << fmt(p[i].second) << "\" x2=\"" << fmt(p[j].first)
       << "\" y2=\"" << fmt(p[j].second) << "\" stroke=\"#c33\" stroke-dasharray=\"5,4\"/>\n";
  }
  for (std::size_t i = 0; i < 4; ++i)
    os << "  <text x=\"" << fmt(p[i].first + 4) << "\" y=\"" << fmt(p[i].second - 4)
       << "\" font-size=\"10\" font-family=\"monospace\">P" << i + 1 << "</text>\n";
  os << "  <text x=\"8\" y=\"" << fmt(kCanvas + 20) << "\" font-size=\"11\" font-family=\"monospace\">" << caption
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::vector<std::filesystem::path> write_trace_svgs(const ReductionTrace& trace, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& st = trace.steps[i];
    char name[32];
    std::snprintf(name, sizeof name, "step_%03zu.svg", i);
    std::ostringstream caption;
    caption << (st.kind == StepKind::Morph ? "morph" : "recut ") << (st.kind == StepKind::Recut ? to_string(st.diagonal) : "")
            << "  phi=" << fmt(st.phi_after) << "  angle=" << fmt(st.diag_angle_after);
    const auto path = dir / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << render_svg(st.quad_after, caption.str());
    written.push_back(path);
  }
  return written;
}

}  // namespace quadlab
