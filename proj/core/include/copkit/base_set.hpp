#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "copkit/types.hpp"

namespace copkit {

/// A subset of the naturals usable as the base set M of a circle of
/// partition. Two families:
///
///  - analytic kinds (naturals, odds): membership is a formula, no bound;
///  - materialized kinds (primes, custom): elements are stored up to an
///    explicit bound and membership queries beyond it fail loudly.
///
/// Values are immutable after construction and safe to share across threads.
class BaseSet {
 public:
  enum class Kind { naturals, primes, odds, custom };

  static BaseSet naturals();
  static BaseSet odds();
  /// Sieve of Eratosthenes up to and including bound. bound >= 2.
  static BaseSet primes(natural bound);
  /// From explicit elements; sorted and deduplicated. Elements must be >= 1.
  static BaseSet custom(std::vector<natural> elements);
  /// Custom-set file: newline-separated decimal naturals (lines starting
  /// with '#' ignored) or a single JSON array of naturals.
  static BaseSet load(const std::string& path);

  Kind kind() const { return kind_; }
  bool analytic() const { return kind_ == Kind::naturals || kind_ == Kind::odds; }
  /// Largest value the set is materialized up to. Analytic kinds report
  /// the maximum representable natural.
  natural bound() const { return bound_; }
  std::string name() const;

  /// Membership. Throws MaterializedBoundError when x exceeds the bound of
  /// a materialized kind.
  bool contains(natural x) const;

  /// Stored elements of a materialized kind (sorted, unique).
  const std::vector<natural>& elements() const;
  /// Elements <= hi for any kind. hi must not exceed bound().
  std::vector<natural> elements_up_to(natural hi) const;
  natural min_element() const;

  /// Newline form, sorted ascending; defined for materialized kinds.
  std::string serialize() const;

 private:
  BaseSet(Kind kind, natural bound) : kind_(kind), bound_(bound) {}

  Kind kind_;
  natural bound_;
  std::vector<natural> elements_;  // materialized kinds only
  std::vector<bool> member_;       // materialized kinds only, index by value
};

/// Optional restriction on which generators n, t, s are admissible in
/// expansion queries. Absent set = every natural is admissible.
struct GeneratorFilter {
  std::shared_ptr<const BaseSet> allowed;

  bool admits(natural x) const { return !allowed || allowed->contains(x); }
};

inline constexpr natural kUnbounded = std::numeric_limits<natural>::max();

}  // namespace copkit
