#pragma once

#include <span>
#include <string>
#include <vector>

#include "copkit/ccop.hpp"
#include "copkit/expansion.hpp"
#include "copkit/types.hpp"

namespace copkit {

enum class FigureKind { single_circle, big_bang, expansion };

struct Canvas {
  double width = 0;
  double height = 0;
};

/// Declarative figure: embedding circles for the listed generators plus
/// chords for highlighted axes and certificate witnesses. Rendering is
/// byte-deterministic: fixed element order, 6 decimal places, no
/// timestamps.
struct FigureSpec {
  FigureKind kind = FigureKind::single_circle;
  std::vector<natural> generators;
  std::vector<CAxis> highlighted_axes;
  std::vector<ExpansionCertificate> certificates;
  Canvas canvas;
  double scale = 10.0;  // canvas units per integer
};

/// Margin kept around the content; part of the canvas-size invariant.
inline constexpr double kFigureMargin = 12.0;

/// Smallest canvas that fits every listed generator at the given scale.
Canvas fit_canvas(std::span<const natural> generators, double scale);

FigureSpec figure_circle(natural n, std::span<const CAxis> axes, double scale = 10.0);
FigureSpec figure_big_bang(std::span<const natural> generators, double scale = 10.0);
FigureSpec figure_expansion(std::span<const ExpansionCertificate> certs, double scale = 10.0);

/// SVG 1.1 byte stream. Throws FigureSpecError naming the violated
/// invariant when the spec is inconsistent.
std::string render_svg(const FigureSpec& spec);

}  // namespace copkit
