#pragma once

#include <optional>

#include "copkit/types.hpp"

namespace copkit {

/// Returns the exact square root when v is a perfect square.
std::optional<natural> perfect_sqrt(natural v);

enum class SurdOp : char { plus = '+', minus = '-' };

/// The nonnegative real |sqrt(a) +- sqrt(b)| with natural radicands, in a
/// normal form that makes equality decidable:
///
///  - a >= b;
///  - whenever a*b is a perfect square the value collapses to a single
///    square root sqrt(a + b +- 2*sqrt(a*b)), stored as (v, 0, plus).
///
/// In particular every surd whose value is an integer ends up as
/// (k*k, 0, plus), so exact_integer() is total on such values.
class SurdLength {
 public:
  SurdLength(natural a, natural b, SurdOp op);

  natural a() const { return a_; }
  natural b() const { return b_; }
  SurdOp op() const { return op_; }

  double value() const;
  std::optional<natural> exact_integer() const;

  bool operator==(const SurdLength&) const = default;

 private:
  natural a_;
  natural b_;
  SurdOp op_;
};

}  // namespace copkit
