#include "maxmin/svg.hpp"

#include <cstdio>
#include <sstream>

#include "maxmin/errors.hpp"

namespace maxmin {

namespace {

constexpr double kCanvas = 512.0;
constexpr double kMargin = 16.0;

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Canvas {
 public:
  explicit Canvas(const SemiringBounds& b) : lo_(b.lo.to_double()), span_((b.hi - b.lo).to_double()) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
    out_ << "<rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"white\"/>\n";
  }

  double px(const Value& x) const { return kMargin + (x.to_double() - lo_) / span_ * (kCanvas - 2 * kMargin); }
  double py(const Value& y) const {
    return kCanvas - kMargin - (y.to_double() - lo_) / span_ * (kCanvas - 2 * kMargin);
  }

  void rect(const Point& lower, const Point& upper, const std::string& style) {
    out_ << "<rect x=\"" << fixed3(px(lower[0])) << "\" y=\"" << fixed3(py(upper[1])) << "\" width=\""
         << fixed3(px(upper[0]) - px(lower[0])) << "\" height=\"" << fixed3(py(lower[1]) - py(upper[1])) << "\" "
         << style << "/>\n";
  }

  void polyline(const std::vector<Point>& pts, const std::string& style) {
    out_ << "<polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out_ << ' ';
      out_ << fixed3(px(pts[i][0])) << ',' << fixed3(py(pts[i][1]));
    }
    out_ << "\" " << style << "/>\n";
  }

  void circle(const Point& p, double r, const std::string& style) {
    out_ << "<circle cx=\"" << fixed3(px(p[0])) << "\" cy=\"" << fixed3(py(p[1])) << "\" r=\"" << fixed3(r) << "\" "
         << style << "/>\n";
  }

  void frame(const SemiringBounds& b) {
    rect(Point{b.lo, b.lo}, Point{b.hi, b.hi}, "fill=\"none\" stroke=\"black\" stroke-width=\"1\"");
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  double lo_;
  double span_;
  std::ostringstream out_;
};

void require_planar(std::size_t d) {
  if (d != 2) {
    throw PreconditionError("render supports dimension 2 only (got " + std::to_string(d) +
                            "); use the JSON output of the matching subcommand for other dimensions");
  }
}

}  // namespace

std::string render_segment_svg(const SegmentDecomposition& seg) {
  require_planar(seg.x.dim());
  Canvas c(seg.bounds);
  c.frame(seg.bounds);
  for (const auto& piece : seg.pieces) {
    c.polyline({piece.from, piece.to}, "fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\"");
  }
  c.circle(seg.x, 4, "fill=\"black\"");
  c.circle(seg.y, 4, "fill=\"black\"");
  return c.finish();
}

std::string render_semispaces_svg(const SemispaceFamily& family) {
  require_planar(family.anchor.dim());
  static const char* kFills[] = {"#d9e6f5", "#f5e2d9", "#dff0d8"};
  Canvas c(family.bounds);
  c.frame(family.bounds);
  for (std::size_t k = 0; k < family.members.size(); ++k) {
    const Box b = sector_box(family.members[k], family.bounds);
    c.rect(b.lower, b.upper,
           std::string("fill=\"") + kFills[k % 3] + "\" fill-opacity=\"0.7\" stroke=\"#444444\" stroke-width=\"1\"");
  }
  c.circle(family.anchor, 4, "fill=\"black\"");
  return c.finish();
}

std::string render_hyperplane_svg(const SemispaceId& s, const SemiringBounds& bounds,
                                  const std::vector<Point>& generators) {
  require_planar(s.dim());
  Canvas c(bounds);
  // The closure of the semispace is everything outside the open sector.
  c.rect(Point{bounds.lo, bounds.lo}, Point{bounds.hi, bounds.hi}, "fill=\"#d9e6f5\" stroke=\"none\"");
  const Box sector = sector_box(s, bounds);
  c.rect(sector.lower, sector.upper, "fill=\"white\" stroke=\"#1f5fa8\" stroke-width=\"2\"");
  c.frame(bounds);
  for (const auto& g : generators) c.circle(g, 3, "fill=\"#a83a1f\"");
  c.circle(s.anchor, 4, "fill=\"black\"");
  return c.finish();
}

}  // namespace maxmin
