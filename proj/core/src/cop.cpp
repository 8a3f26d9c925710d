#include "copkit/cop.hpp"

#include <algorithm>

#include "copkit/errors.hpp"

namespace copkit {

bool Cop::contains_weight(natural x) const {
  return std::binary_search(weights.begin(), weights.end(), x);
}

std::optional<natural> Cop::center() const {
  if (n % 2 == 0 && contains_weight(n / 2)) return n / 2;
  return std::nullopt;
}

Cop cop_build(natural n, const BaseSet& base) {
  if (n < 2) throw InvalidBoundError("generator must be at least 2, got " + std::to_string(n));
  if (n > base.bound()) {
    throw MaterializedBoundError("generator " + std::to_string(n) + " exceeds the " + base.name() +
                                 " set bound " + std::to_string(base.bound()));
  }
  Cop cop;
  cop.n = n;
  cop.base = base.name();
  for (natural x = 1; x < n; ++x) {
    if (base.contains(x) && base.contains(n - x)) cop.weights.push_back(x);
  }
  return cop;
}

AxesList axes(const Cop& cop) {
  AxesList out;
  for (natural x : cop.weights) {
    if (2 * x < cop.n) out.real.push_back(Axis{x, cop.n - x, false});
  }
  if (auto c = cop.center()) out.center = Axis{*c, *c, true};
  return out;
}

natural nu(const Cop& cop) { return cop.weights.size() / 2; }

natural axis_partner(const Cop& cop, natural x) {
  if (!cop.contains_weight(x)) {
    throw NotAPointError(std::to_string(x) + " is not a point of C(" + std::to_string(cop.n) +
                         ", " + cop.base + ")");
  }
  return cop.n - x;
}

}  // namespace copkit
