#include "copkit/expansion.hpp"

#include <algorithm>
#include <set>

#include "copkit/errors.hpp"

namespace copkit {

Principle classify_principle(natural t, natural s) {
  if (s == t) return Principle::equality;
  return s > t ? Principle::forecast : Principle::squeeze;
}

std::pair<bool, bool> axial_ordering_check(natural zx, natural wx, natural n, natural t) {
  const bool form1 = zx < wx && n - zx < n + t - wx;
  const bool form2 = zx < wx && wx < zx + t;
  return {form1, form2};
}

namespace {

void check_query_basics(const ExpansionQuery& q) {
  if (!q.superset || !q.subset) throw InvalidQueryError("query needs both base sets");
  if (q.t < 1 || q.s < 1) {
    throw InvalidQueryError("offsets t and s must be at least 1 (t=" + std::to_string(q.t) +
                            ", s=" + std::to_string(q.s) + ")");
  }
  if (q.n < 2) throw InvalidQueryError("generator must be at least 2, got " + std::to_string(q.n));
  for (natural g : {q.n, q.t, q.s}) {
    if (!q.filter.admits(g)) {
      throw InvalidQueryError("generator filter rejects " + std::to_string(g));
    }
  }
}

}  // namespace

ExpansionQuery make_query(natural n, natural t, natural s,
                          std::shared_ptr<const BaseSet> superset,
                          std::shared_ptr<const BaseSet> subset, GeneratorFilter filter) {
  ExpansionQuery q{n, t, s, std::move(superset), std::move(subset), std::move(filter)};
  check_query_basics(q);

  const natural limit = q.n + std::max(q.t, q.s);
  for (const BaseSet* set : {q.superset.get(), q.subset.get()}) {
    if (set->bound() < limit) {
      throw MaterializedBoundError("query touches generator " + std::to_string(limit) +
                                   " but the " + set->name() + " set is materialized to " +
                                   std::to_string(set->bound()));
    }
  }
  for (natural e : q.subset->elements_up_to(limit)) {
    if (!q.superset->contains(e)) {
      throw InvalidQueryError("subset is not contained in superset: " + std::to_string(e) +
                              " is in " + q.subset->name() + " but not in " + q.superset->name());
    }
  }
  return q;
}

std::vector<ExpansionCertificate> expand(const ExpansionQuery& q) {
  check_query_basics(q);
  const natural n = q.n, t = q.t, s = q.s;
  const Cop cop_n = cop_build(n, *q.superset);
  const Cop cop_nt = cop_build(n + t, *q.superset);
  const Principle principle = classify_principle(t, s);

  std::vector<ExpansionCertificate> certs;
  // z runs over canonical low axis endpoints of C°(n, C_M), the center
  // included; its partner value w = z + s may be either endpoint of the
  // matching axis of C°(n+t, C_M).
  for (natural z : cop_n.weights) {
    if (2 * z > n) break;  // weights are sorted; beyond the center only high endpoints remain
    const natural w = z + s;
    if (!cop_nt.contains_weight(w)) continue;
    if (!q.subset->contains(w)) continue;
    if (!q.subset->contains(n - z)) continue;

    ExpansionCertificate cert;
    cert.n = n;
    cert.t = t;
    cert.s = s;
    cert.principle = principle;
    cert.witness_z = make_caxis(n, z, Sign::plus);
    cert.witness_w = make_caxis(n + t, std::min(w, n + t - w), Sign::plus);
    cert.deduced = make_caxis(n + s, std::min(w, n - z), Sign::plus);
    cert.z_low = z;
    cert.w_value = w;
    cert.degenerate_witness = cert.witness_z.degenerate() || cert.witness_w.degenerate();
    certs.push_back(cert);
  }
  return certs;
}

VerificationReport verify_certificates(const ExpansionQuery& q,
                                       std::span<const ExpansionCertificate> certs) {
  VerificationReport report;
  const Cop direct = cop_build(q.n + q.s, *q.subset);
  const AxesList direct_axes = axes(direct);

  std::set<std::pair<natural, natural>> direct_set;
  for (const Axis& a : direct_axes.real) direct_set.emplace(a.low, a.high);
  if (direct_axes.center) direct_set.emplace(direct_axes.center->low, direct_axes.center->high);
  report.direct_axis_count = direct_set.size();

  std::set<std::pair<natural, natural>> deduced_set;
  report.certificate_sound.reserve(certs.size());
  for (const ExpansionCertificate& cert : certs) {
    const std::pair<natural, natural> key{cert.deduced.p.x, cert.deduced.q.x};
    deduced_set.insert(key);
    const bool present = direct_set.contains(key);
    report.certificate_sound.push_back(present);
    if (!present) {
      report.sound = false;
      report.soundness_violations.push_back(
          Axis{key.first, key.second, key.first == key.second});
    }
    report.used_degenerate_witness |= cert.degenerate_witness;
  }

  if (q.superset->kind() == BaseSet::Kind::naturals) {
    bool complete = true;
    auto check_reached = [&](const Axis& a) {
      if (a.low < q.s + 1) return;  // no z = u - s >= 1 exists, exempt
      if (!deduced_set.contains({a.low, a.high})) {
        complete = false;
        report.completeness_violations.push_back(a);
      }
    };
    for (const Axis& a : direct_axes.real) check_reached(a);
    if (direct_axes.center) check_reached(*direct_axes.center);
    report.complete = complete;
  }
  return report;
}

std::vector<ScanRow> scan(natural from, natural to, Parity parity, natural t, natural s,
                          std::shared_ptr<const BaseSet> superset,
                          std::shared_ptr<const BaseSet> subset, GeneratorFilter filter) {
  if (from > to) {
    throw InvalidQueryError("empty scan range [" + std::to_string(from) + ", " +
                            std::to_string(to) + "]");
  }
  if (from < 2) throw InvalidQueryError("scan range must start at 2 or later");
  // Validates bounds and the subset relation once, at the widest generator.
  make_query(to, t, s, superset, subset, filter);

  std::vector<ScanRow> rows;
  for (natural n = from; n <= to; ++n) {
    if (parity == Parity::even && n % 2 != 0) continue;
    if (parity == Parity::odd && n % 2 != 1) continue;
    if (!filter.admits(n)) continue;
    const ExpansionQuery q{n, t, s, superset, subset, filter};
    const auto certs = expand(q);
    const auto report = verify_certificates(q, certs);

    std::set<std::pair<natural, natural>> deduced;
    for (const auto& cert : certs) deduced.emplace(cert.deduced.p.x, cert.deduced.q.x);

    rows.push_back(ScanRow{n, t, s, classify_principle(t, s), certs.size(), deduced.size(),
                           report.direct_axis_count, report.sound, report.complete});
  }
  return rows;
}

}  // namespace copkit
