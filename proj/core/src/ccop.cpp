#include "copkit/ccop.hpp"

#include <algorithm>
#include <cmath>

#include "copkit/errors.hpp"

namespace copkit {

double CPoint::imag() const {
  return to_int(sigma) * std::sqrt(static_cast<double>(imag_sq()));
}

CPoint make_cpoint(natural n, natural x, Sign sigma) {
  if (x < 1 || x >= n) {
    throw NotAPointError("real weight " + std::to_string(x) + " outside (0, " + std::to_string(n) +
                         ")");
  }
  return CPoint{n, x, sigma};
}

CPoint conjugate(const CPoint& p) { return CPoint{p.n, p.x, opposite(p.sigma)}; }

CPoint axis_partner_point(const CPoint& p) { return CPoint{p.n, p.n - p.x, opposite(p.sigma)}; }

bool same_complex_value(const CPoint& a, const CPoint& b) {
  return a.x == b.x && a.sigma == b.sigma && a.imag_sq() == b.imag_sq();
}

CAxis make_caxis(natural n, natural x, Sign sigma) {
  CPoint p = make_cpoint(n, x, sigma);
  CPoint q = axis_partner_point(p);
  if (q.x < p.x || (q.x == p.x && p.sigma == Sign::minus)) std::swap(p, q);
  return CAxis{p, q};
}

std::vector<CPoint> ccop_points(natural n, const BaseSet& base) {
  const Cop source = cop_build(n, base);
  std::vector<CPoint> points;
  points.reserve(source.weights.size() * 2);
  for (natural x : source.weights) {
    points.push_back(CPoint{n, x, Sign::plus});
    points.push_back(CPoint{n, x, Sign::minus});
  }
  return points;
}

std::vector<CAxis> caxes(natural n, const BaseSet& base) {
  const Cop source = cop_build(n, base);
  const AxesList source_axes = axes(source);
  std::vector<CAxis> out;
  out.reserve(source_axes.real.size() * 2 + 1);
  for (const Axis& a : source_axes.real) {
    out.push_back(make_caxis(n, a.low, Sign::plus));
    out.push_back(make_caxis(n, a.low, Sign::minus));
  }
  if (source_axes.center) out.push_back(make_caxis(n, source_axes.center->low, Sign::plus));
  return out;
}

natural nu_complex(natural n, const BaseSet& base) {
  const Cop source = cop_build(n, base);
  return 2 * nu(source) + (source.center() ? 1 : 0);
}

natural least_generator(const BaseSet& base) { return 2 * base.min_element(); }

RegionClass EmbeddingCircle::classify(const Rat& re, const Rat& im) const {
  return classify_im_sq(re, im * im);
}

RegionClass EmbeddingCircle::classify_im_sq(const Rat& re, const Rat& im_sq) const {
  const Rat gen(static_cast<long long>(n));
  if (re < Rat(0) || re > gen) return RegionClass::exterior;
  const Rat rhs = re * (gen - re);
  if (im_sq == rhs) return RegionClass::on_circle;
  return im_sq < rhs ? RegionClass::interior : RegionClass::exterior;
}

RegionClass classify_region(natural n, const Rat& re, const Rat& im) {
  return EmbeddingCircle{n}.classify(re, im);
}

RegionClass classify_region_im_sq(natural n, const Rat& re, const Rat& im_sq) {
  return EmbeddingCircle{n}.classify_im_sq(re, im_sq);
}

RegionPartition interior_points_filter(natural n, const BaseSet& base,
                                       std::span<const RatPoint> candidates) {
  const Cop source = cop_build(n, base);
  const EmbeddingCircle circle{n};
  RegionPartition out;
  for (const RatPoint& c : candidates) {
    const bool natural_re = c.re.denominator() == 1 && c.re.numerator() >= 1;
    const bool member = natural_re && base.contains(static_cast<natural>(c.re.numerator()));
    if (!member) continue;  // not a point of C_M, excluded from every set
    switch (circle.classify(c.re, c.im)) {
      case RegionClass::on_circle:
        out.on_circle.push_back(c);
        break;
      case RegionClass::interior:
        if (!source.empty()) out.interior.push_back(c);
        break;
      case RegionClass::exterior:
        if (!source.empty()) out.exterior.push_back(c);
        break;
    }
  }
  return out;
}

SurdLength chord_gamma(const CPoint& p, const CPoint& q) {
  if (p.n != q.n) {
    throw GeneratorMismatchError("chord endpoints belong to generators " + std::to_string(p.n) +
                                 " and " + std::to_string(q.n));
  }
  const natural n = p.n;
  const SurdOp op = p.sigma == q.sigma ? SurdOp::minus : SurdOp::plus;
  return SurdLength(p.x * (n - q.x), q.x * (n - p.x), op);
}

double chord_float(const CPoint& p, const CPoint& q) { return chord_gamma(p, q).value(); }

CAxis diameter_of(natural n, const CPoint& p) {
  if (p.n != n) {
    throw GeneratorMismatchError("point of generator " + std::to_string(p.n) +
                                 " is not on the embedding circle of " + std::to_string(n));
  }
  return make_caxis(n, p.x, p.sigma);
}

CcopBundle ccop_build(natural n, const BaseSet& base) {
  CcopBundle bundle;
  bundle.n = n;
  bundle.base = base.name();
  bundle.points = ccop_points(n, base);
  bundle.axes = caxes(n, base);
  bundle.nu_complex = bundle.axes.size();
  return bundle;
}

}  // namespace copkit
