#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copkit/base_set.hpp"
#include "copkit/types.hpp"

namespace copkit {

/// Unordered weight pair {low, high} with low + high = n. The degenerate
/// axis is the one through the center weight n/2.
struct Axis {
  natural low = 0;
  natural high = 0;
  bool degenerate = false;

  bool operator==(const Axis&) const = default;
};

/// Classical circle of partition C(n, M): the generator together with the
/// sorted weights x such that both x and n-x are members of the base set.
/// The weight list is closed under x -> n-x.
struct Cop {
  natural n = 0;
  std::string base;               // base-set name, for serialization
  std::vector<natural> weights;   // sorted ascending

  bool empty() const { return weights.empty(); }
  bool contains_weight(natural x) const;
  /// n/2 when n is even and n/2 is a weight.
  std::optional<natural> center() const;
};

/// Real axes sorted by low endpoint, with the degenerate axis (if any)
/// carried separately so it is never counted among them.
struct AxesList {
  std::vector<Axis> real;
  std::optional<Axis> center;
};

/// Builds C(n, M). n >= 2 and the base must be materialized to at least n.
Cop cop_build(natural n, const BaseSet& base);

AxesList axes(const Cop& cop);

/// Number of real axes: floor(k/2) for k weights.
natural nu(const Cop& cop);

/// The unique partner n-x; x itself iff x is the center. Throws
/// NotAPointError when x is not a weight.
natural axis_partner(const Cop& cop, natural x);

}  // namespace copkit
