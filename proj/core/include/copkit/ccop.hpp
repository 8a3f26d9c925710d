#pragma once

#include <boost/rational.hpp>
#include <span>
#include <string>
#include <vector>

#include "copkit/base_set.hpp"
#include "copkit/cop.hpp"
#include "copkit/surd.hpp"
#include "copkit/types.hpp"

namespace copkit {

/// Exact rational for region queries near the embedding circle.
using Rat = boost::rational<long long>;

/// Point of a complex circle of partition, stored exactly as (generator,
/// real weight, sign of the imaginary weight). The imaginary weight is
/// sigma * sqrt(x * (n - x)); only its square is ever needed for exact
/// identities, and that is derived, never stored.
struct CPoint {
  natural n = 0;
  natural x = 0;
  Sign sigma = Sign::plus;

  natural imag_sq() const { return x * (n - x); }
  double real() const { return static_cast<double>(x); }
  double imag() const;

  bool operator==(const CPoint&) const = default;
};

/// Validating constructor: 1 <= x <= n-1 so the imaginary weight square is
/// positive and the sign unambiguous.
CPoint make_cpoint(natural n, natural x, Sign sigma);

CPoint conjugate(const CPoint& p);

/// The axis partner [n - z]: real weight n-x, flipped sign.
CPoint axis_partner_point(const CPoint& p);

/// Whether two points coincide as complex values (possibly across
/// different generators).
bool same_complex_value(const CPoint& a, const CPoint& b);

/// Axis of a cCoP in canonical orientation: p.x < q.x, or, for the
/// degenerate (vertical) axis, p.x == q.x with p.sigma = plus.
struct CAxis {
  CPoint p;
  CPoint q;

  bool degenerate() const { return p.x == q.x; }
  natural generator() const { return p.n; }

  bool operator==(const CAxis&) const = default;
};

/// Canonical axis through the endpoint (x, sigma) of generator n.
CAxis make_caxis(natural n, natural x, Sign sigma);

/// Points of C°(n, C_M): two per source weight, ordered by (x, plus before
/// minus). Empty iff the source CoP is empty.
std::vector<CPoint> ccop_points(natural n, const BaseSet& base);

/// Axes of C°(n, C_M): per real source axis the (+,-) orientation followed
/// by its conjugate, ordered by low weight; the degenerate axis, when the
/// center exists, comes last.
std::vector<CAxis> caxes(natural n, const BaseSet& base);

/// Number of axes of the cCoP: 2*nu(source) (+1 iff the center exists).
natural nu_complex(natural n, const BaseSet& base);

/// Smallest generator with a non-empty CoP over this base: twice the
/// smallest element.
natural least_generator(const BaseSet& base);

enum class RegionClass { on_circle, interior, exterior };

/// Embedding circle of generator n: center n/2 on the real axis,
/// diameter n. A complex point (a, b) is on it iff 0 <= a <= n and
/// b^2 = a*(n-a).
struct EmbeddingCircle {
  natural n = 0;

  Rat center() const { return Rat(static_cast<long long>(n), 2); }
  natural diameter() const { return n; }
  RegionClass classify(const Rat& re, const Rat& im) const;
  /// Same decision from the squared imaginary part; lets callers classify
  /// points whose imaginary part is an irrational square root.
  RegionClass classify_im_sq(const Rat& re, const Rat& im_sq) const;
};

RegionClass classify_region(natural n, const Rat& re, const Rat& im);
RegionClass classify_region_im_sq(natural n, const Rat& re, const Rat& im_sq);

struct RatPoint {
  Rat re;
  Rat im;

  bool operator==(const RatPoint&) const = default;
};

struct RegionPartition {
  std::vector<RatPoint> interior;
  std::vector<RatPoint> exterior;
  std::vector<RatPoint> on_circle;
};

/// Partitions candidates into interior/exterior/on-circle points with
/// respect to the cCoP: a candidate counts only when its real part is a
/// natural member of the base set. When the cCoP is empty the interior and
/// exterior sets are empty; the on-circle bucket is still reported.
RegionPartition interior_points_filter(natural n, const BaseSet& base,
                                       std::span<const RatPoint> candidates);

/// Exact chord length |sqrt(x1*(n-x2)) +- sqrt(x2*(n-x1))|, minus iff the
/// imaginary signs agree. Axis partners normalize to exactly n; the
/// partner of the conjugate normalizes to |x1 - x2|.
SurdLength chord_gamma(const CPoint& p, const CPoint& q);

/// Floating rendering of chord_gamma.
double chord_float(const CPoint& p, const CPoint& q);

/// The diameter (axis) of the embedding circle through p and its partner.
CAxis diameter_of(natural n, const CPoint& p);

/// Everything about one cCoP, ready for serialization.
struct CcopBundle {
  natural n = 0;
  std::string base;
  std::vector<CPoint> points;
  std::vector<CAxis> axes;
  natural nu_complex = 0;
};

CcopBundle ccop_build(natural n, const BaseSet& base);

}  // namespace copkit
