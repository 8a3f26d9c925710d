#include "copkit/surd.hpp"

#include <cmath>
#include <utility>

namespace copkit {

std::optional<natural> perfect_sqrt(natural v) {
  auto r = static_cast<natural>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r == v) return r;
  return std::nullopt;
}

SurdLength::SurdLength(natural a, natural b, SurdOp op) : a_(a), b_(b), op_(op) {
  if (a_ < b_) std::swap(a_, b_);
  if (auto root = perfect_sqrt(a_ * b_)) {
    // sqrt(a*b) rational: the whole value is a single square root.
    a_ = op_ == SurdOp::minus ? a_ + b_ - 2 * *root : a_ + b_ + 2 * *root;
    b_ = 0;
    op_ = SurdOp::plus;
  }
}

double SurdLength::value() const {
  if (b_ == 0) return std::sqrt(static_cast<double>(a_));
  const double ra = std::sqrt(static_cast<double>(a_));
  const double rb = std::sqrt(static_cast<double>(b_));
  if (op_ == SurdOp::plus) return ra + rb;
  // a > b here (a == b collapses in the constructor); the quotient form
  // avoids cancellation.
  return static_cast<double>(a_ - b_) / (ra + rb);
}

std::optional<natural> SurdLength::exact_integer() const {
  if (b_ != 0) return std::nullopt;
  return perfect_sqrt(a_);
}

}  // namespace copkit
