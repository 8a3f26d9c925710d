#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "copkit/base_set.hpp"
#include "copkit/ccop.hpp"
#include "copkit/cop.hpp"
#include "copkit/types.hpp"

namespace copkit {

enum class Principle { equality, forecast, squeeze };

/// equality iff s == t, forecast iff s > t, squeeze iff s < t.
Principle classify_principle(natural t, natural s);

/// Both forms of the axial points ordering lemma, evaluated independently:
///   form1: zx < wx and n - zx < n + t - wx
///   form2: zx < wx < zx + t
/// zx must be an axis endpoint of C°(n, .), wx of C°(n+t, .); the lemma
/// asserts the two results always agree.
std::pair<bool, bool> axial_ordering_check(natural zx, natural wx, natural n, natural t);

/// Expansion search over two known cCoPs C°(n, C_M) and C°(n+t, C_M),
/// deducing axes of C°(n+s, C_B).
struct ExpansionQuery {
  natural n = 0;
  natural t = 0;
  natural s = 0;
  std::shared_ptr<const BaseSet> superset;  // M
  std::shared_ptr<const BaseSet> subset;    // B, subset of M
  GeneratorFilter filter;
};

/// Validates t,s >= 1, n >= 2, generator admissibility, materialized
/// bounds covering n + max(t,s), and B ⊆ M on the range the query uses.
ExpansionQuery make_query(natural n, natural t, natural s,
                          std::shared_ptr<const BaseSet> superset,
                          std::shared_ptr<const BaseSet> subset,
                          GeneratorFilter filter = {});

struct ExpansionCertificate {
  natural n = 0;
  natural t = 0;
  natural s = 0;
  Principle principle = Principle::equality;
  CAxis witness_z;  // axis of C°(n, C_M)
  CAxis witness_w;  // axis of C°(n+t, C_M)
  CAxis deduced;    // axis of C°(n+s, C_B), imaginary parts from the circle condition
  natural z_low = 0;    // Re(z): canonical low endpoint of witness_z
  natural w_value = 0;  // Re(w) = z_low + s: the witness_w endpoint used
  bool degenerate_witness = false;  // witness_z or witness_w is degenerate
};

/// All certificates, sorted by (Re(z), Re(w)). The witness z runs over the
/// canonical low endpoints of the axes of C°(n, C_M) (center included);
/// the partner value w = z + s may sit at either endpoint of its axis of
/// C°(n+t, C_M). Empty result means no witnesses exist.
std::vector<ExpansionCertificate> expand(const ExpansionQuery& q);

/// Oracle cross-check of a certificate batch against the directly built
/// C°(n+s, C_B). Violations are report content, never exceptions.
struct VerificationReport {
  bool sound = true;
  /// Set only for superset = naturals, where the reverse construction is
  /// provable: every direct axis with low endpoint u >= s+1 must be
  /// deduced by some certificate.
  std::optional<bool> complete;
  std::vector<bool> certificate_sound;      // per input certificate
  std::vector<Axis> soundness_violations;   // deduced axes missing from the direct build
  std::vector<Axis> completeness_violations;  // direct axes no certificate reaches
  bool used_degenerate_witness = false;
  natural direct_axis_count = 0;  // real axes + center of the direct source CoP
};

VerificationReport verify_certificates(const ExpansionQuery& q,
                                       std::span<const ExpansionCertificate> certs);

struct ScanRow {
  natural n = 0;
  natural t = 0;
  natural s = 0;
  Principle principle = Principle::equality;
  natural witnesses = 0;      // certificates found
  natural deduced_axes = 0;   // distinct deduced axes
  natural direct_axes = 0;    // axes of the direct C(n+s, B)
  bool sound = true;
  std::optional<bool> complete;
};

enum class Parity { any, even, odd };

/// Runs expand + verify for every n in [from, to] passing the parity
/// filter; rows come back in ascending n order.
std::vector<ScanRow> scan(natural from, natural to, Parity parity, natural t, natural s,
                          std::shared_ptr<const BaseSet> superset,
                          std::shared_ptr<const BaseSet> subset,
                          GeneratorFilter filter = {});

}  // namespace copkit
