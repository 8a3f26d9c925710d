#include "copkit/render.hpp"

#include <algorithm>
#include <cstdio>

#include "copkit/errors.hpp"

namespace copkit {

namespace {

constexpr const char* kCircleStroke = "#222222";
constexpr const char* kGridStroke = "#bbbbbb";
constexpr const char* kChordStroke = "#1f77b4";
constexpr const char* kDeducedStroke = "#d62728";

/// Fixed 6-place decimal; the one number format every figure byte goes
/// through.
std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Frame {
  double scale;
  double margin;
  double ymax;  // largest |Im| of the content, = max generator / 2

  double xs(double x) const { return margin + x * scale; }
  double ys(double y) const { return margin + (ymax - y) * scale; }
};

struct SvgWriter {
  std::string out;

  void attr(const char* name, const std::string& value) {
    out += ' ';
    out += name;
    out += "=\"";
    out += value;
    out += '"';
  }

  void line(const Frame& f, double x1, double y1, double x2, double y2, const char* stroke,
            double width, const char* dash = nullptr) {
    out += "<line";
    attr("x1", fmt(f.xs(x1)));
    attr("y1", fmt(f.ys(y1)));
    attr("x2", fmt(f.xs(x2)));
    attr("y2", fmt(f.ys(y2)));
    attr("stroke", stroke);
    attr("stroke-width", fmt(width));
    if (dash) attr("stroke-dasharray", dash);
    out += "/>\n";
  }

  void dot(const Frame& f, double x, double y, double r, const char* fill) {
    out += "<circle";
    attr("cx", fmt(f.xs(x)));
    attr("cy", fmt(f.ys(y)));
    attr("r", fmt(r));
    attr("fill", fill);
    out += "/>\n";
  }

  void circle(const Frame& f, double cx, double cy, double r, const char* stroke, double width) {
    out += "<circle";
    attr("cx", fmt(f.xs(cx)));
    attr("cy", fmt(f.ys(cy)));
    attr("r", fmt(r * f.scale));
    attr("fill", "none");
    attr("stroke", stroke);
    attr("stroke-width", fmt(width));
    out += "/>\n";
  }

  /// Chord with endpoint markers. Conjugate axes dashed, the degenerate
  /// axis dotted, deduced axes bold.
  void chord(const Frame& f, const CAxis& axis, bool deduced) {
    const char* stroke = deduced ? kDeducedStroke : kChordStroke;
    const double width = deduced ? 3.0 : 1.5;
    const char* dash = nullptr;
    if (axis.degenerate()) {
      dash = "2,4";
    } else if (axis.p.sigma == Sign::minus) {
      dash = "6,4";  // conjugate orientation
    }
    line(f, axis.p.real(), axis.p.imag(), axis.q.real(), axis.q.imag(), stroke, width, dash);
    dot(f, axis.p.real(), axis.p.imag(), 3.0, stroke);
    dot(f, axis.q.real(), axis.q.imag(), 3.0, stroke);
  }
};

natural max_generator(const FigureSpec& spec) {
  return *std::max_element(spec.generators.begin(), spec.generators.end());
}

std::string join_generators(const FigureSpec& spec) {
  std::string s;
  for (natural g : spec.generators) {
    if (!s.empty()) s += ',';
    s += std::to_string(g);
  }
  return s;
}

void validate(const FigureSpec& spec) {
  if (spec.generators.empty()) throw FigureSpecError("figure lists no generators");
  if (!(spec.scale > 0)) throw FigureSpecError("scale must be positive");
  for (natural g : spec.generators) {
    if (g < 2) throw FigureSpecError("generator " + std::to_string(g) + " is below 2");
  }
  const auto listed = [&](natural g) {
    return std::find(spec.generators.begin(), spec.generators.end(), g) != spec.generators.end();
  };
  for (const CAxis& a : spec.highlighted_axes) {
    if (!listed(a.generator())) {
      throw FigureSpecError("highlighted axis of generator " + std::to_string(a.generator()) +
                            " does not belong to a listed generator [" + join_generators(spec) +
                            "]");
    }
  }
  for (const ExpansionCertificate& c : spec.certificates) {
    for (natural g : {c.n, c.n + c.t, c.n + c.s}) {
      if (!listed(g)) {
        throw FigureSpecError("certificate touches generator " + std::to_string(g) +
                              " missing from the listed generators [" + join_generators(spec) +
                              "]");
      }
    }
  }
  const Canvas needed = fit_canvas(spec.generators, spec.scale);
  if (spec.canvas.width + 1e-9 < needed.width || spec.canvas.height + 1e-9 < needed.height) {
    throw FigureSpecError("canvas " + fmt(spec.canvas.width) + "x" + fmt(spec.canvas.height) +
                          " cannot contain the embedding circle of generator " +
                          std::to_string(max_generator(spec)) + " at scale " + fmt(spec.scale) +
                          " (needs " + fmt(needed.width) + "x" + fmt(needed.height) + ")");
  }
}

}  // namespace

Canvas fit_canvas(std::span<const natural> generators, double scale) {
  natural max_n = 0;
  for (natural g : generators) max_n = std::max(max_n, g);
  const double side = static_cast<double>(max_n) * scale + 2 * kFigureMargin;
  return Canvas{side, side};
}

FigureSpec figure_circle(natural n, std::span<const CAxis> axes, double scale) {
  FigureSpec spec;
  spec.kind = FigureKind::single_circle;
  spec.generators = {n};
  spec.highlighted_axes.assign(axes.begin(), axes.end());
  spec.scale = scale;
  spec.canvas = fit_canvas(spec.generators, scale);
  return spec;
}

FigureSpec figure_big_bang(std::span<const natural> generators, double scale) {
  FigureSpec spec;
  spec.kind = FigureKind::big_bang;
  spec.generators.assign(generators.begin(), generators.end());
  spec.scale = scale;
  spec.canvas = fit_canvas(spec.generators, scale);
  return spec;
}

FigureSpec figure_expansion(std::span<const ExpansionCertificate> certs, double scale) {
  if (certs.empty()) throw FigureSpecError("expansion figure needs at least one certificate");
  FigureSpec spec;
  spec.kind = FigureKind::expansion;
  const auto& first = certs.front();
  spec.generators = {first.n, first.n + first.t, first.n + first.s};
  spec.certificates.assign(certs.begin(), certs.end());
  spec.scale = scale;
  spec.canvas = fit_canvas(spec.generators, scale);
  return spec;
}

std::string render_svg(const FigureSpec& spec) {
  validate(spec);

  const natural max_n = max_generator(spec);
  const Frame frame{spec.scale, kFigureMargin, static_cast<double>(max_n) / 2.0};

  SvgWriter svg;
  svg.out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
  svg.attr("width", fmt(spec.canvas.width));
  svg.attr("height", fmt(spec.canvas.height));
  svg.attr("viewBox", "0 0 " + fmt(spec.canvas.width) + " " + fmt(spec.canvas.height));
  svg.out += ">\n";
  svg.out += "<rect width=\"" + fmt(spec.canvas.width) + "\" height=\"" +
             fmt(spec.canvas.height) + "\" fill=\"white\"/>\n";

  // Real and imaginary coordinate axes through the origin.
  const double half = frame.ymax;
  svg.line(frame, -kFigureMargin / spec.scale, 0, static_cast<double>(max_n) + kFigureMargin / spec.scale,
           0, kGridStroke, 1.0);
  svg.line(frame, 0, half + kFigureMargin / spec.scale, 0, -half - kFigureMargin / spec.scale,
           kGridStroke, 1.0);

  std::vector<natural> ordered = spec.generators;
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  for (natural g : ordered) {
    svg.circle(frame, static_cast<double>(g) / 2.0, 0, static_cast<double>(g) / 2.0,
               kCircleStroke, 1.5);
  }

  // The one point all embedding circles share.
  svg.dot(frame, 0, 0, 2.5, kCircleStroke);

  for (const CAxis& a : spec.highlighted_axes) svg.chord(frame, a, false);

  for (const ExpansionCertificate& c : spec.certificates) {
    svg.chord(frame, c.witness_z, false);
    svg.chord(frame, c.witness_w, false);
    svg.chord(frame, c.deduced, true);
  }

  svg.out += "</svg>\n";
  return svg.out;
}

}  // namespace copkit
