#include "copkit/serialize.hpp"

#include <nlohmann/json.hpp>

#include "copkit/errors.hpp"

namespace copkit {

using nlohmann::json;

std::string_view to_string(Principle p) {
  switch (p) {
    case Principle::equality: return "equality";
    case Principle::forecast: return "forecast";
    case Principle::squeeze: return "squeeze";
  }
  return "?";
}

Principle principle_from_string(std::string_view s) {
  if (s == "equality") return Principle::equality;
  if (s == "forecast") return Principle::forecast;
  if (s == "squeeze") return Principle::squeeze;
  throw ParseError("unknown principle name: " + std::string(s));
}

namespace {

json axis_pair(const Axis& a) { return json::array({a.low, a.high}); }

json point_json(const CPoint& p) {
  return json{{"x", p.x}, {"sigma", to_int(p.sigma)}, {"imag_sq", p.imag_sq()}};
}

json caxis_json(const CAxis& a) {
  return json{{"p", point_json(a.p)}, {"q", point_json(a.q)}, {"degenerate", a.degenerate()}};
}

json certificate_json(const ExpansionCertificate& c, bool sound) {
  return json{{"n", c.n},
              {"t", c.t},
              {"s", c.s},
              {"principle", std::string(to_string(c.principle))},
              {"z_low", c.z_low},
              {"w_low", c.w_value},
              {"deduced", json{{"low", c.deduced.p.x}, {"high", c.deduced.q.x}}},
              {"sound", sound}};
}

}  // namespace

std::string export_json(const Cop& cop) {
  json doc;
  doc["n"] = cop.n;
  doc["base"] = cop.base;
  doc["weights"] = cop.weights;
  const AxesList ax = axes(cop);
  json reals = json::array();
  for (const Axis& a : ax.real) reals.push_back(axis_pair(a));
  doc["real_axes"] = std::move(reals);
  doc["degenerate"] = ax.center ? axis_pair(*ax.center) : json(nullptr);
  return doc.dump();
}

std::string export_json(const CcopBundle& bundle) {
  json doc;
  doc["n"] = bundle.n;
  doc["base"] = bundle.base;
  json points = json::array();
  for (const CPoint& p : bundle.points) points.push_back(point_json(p));
  doc["points"] = std::move(points);
  json axes_json = json::array();
  for (const CAxis& a : bundle.axes) axes_json.push_back(caxis_json(a));
  doc["axes"] = std::move(axes_json);
  doc["nu_complex"] = bundle.nu_complex;
  return doc.dump();
}

std::string export_json(std::span<const ExpansionCertificate> certs,
                        const VerificationReport* report) {
  json doc = json::array();
  for (size_t i = 0; i < certs.size(); ++i) {
    const bool sound = !report || i >= report->certificate_sound.size()
                           ? true
                           : report->certificate_sound[i];
    doc.push_back(certificate_json(certs[i], sound));
  }
  return doc.dump();
}

std::string export_json(const SurdLength& gamma) {
  json doc;
  doc["surd"] = json{{"a", gamma.a()},
                     {"b", gamma.b()},
                     {"op", std::string(1, static_cast<char>(gamma.op()))}};
  doc["value"] = gamma.value();
  const auto exact = gamma.exact_integer();
  doc["exact_integer"] = exact ? json(*exact) : json(nullptr);
  return doc.dump();
}

std::string export_json(const VerificationReport& report) {
  json doc;
  doc["sound"] = report.sound;
  doc["complete"] = report.complete ? json(*report.complete) : json(nullptr);
  json sv = json::array();
  for (const Axis& a : report.soundness_violations) sv.push_back(axis_pair(a));
  doc["soundness_violations"] = std::move(sv);
  json cv = json::array();
  for (const Axis& a : report.completeness_violations) cv.push_back(axis_pair(a));
  doc["completeness_violations"] = std::move(cv);
  doc["used_degenerate_witness"] = report.used_degenerate_witness;
  doc["direct_axes"] = report.direct_axis_count;
  return doc.dump();
}

std::string export_json(std::span<const ScanRow> rows) {
  json doc = json::array();
  for (const ScanRow& r : rows) {
    doc.push_back(json{{"n", r.n},
                       {"t", r.t},
                       {"s", r.s},
                       {"principle", std::string(to_string(r.principle))},
                       {"witnesses", r.witnesses},
                       {"deduced_axes", r.deduced_axes},
                       {"direct_axes", r.direct_axes},
                       {"sound", r.sound},
                       {"complete", r.complete ? json(*r.complete) : json(nullptr)}});
  }
  return doc.dump();
}

Cop parse_cop_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid CoP JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("weights")) {
    throw ParseError("CoP JSON must be an object with n and weights");
  }
  Cop cop;
  cop.n = doc["n"].get<natural>();
  cop.base = doc.value("base", std::string("custom"));
  cop.weights = doc["weights"].get<std::vector<natural>>();
  return cop;
}

std::string scan_csv(std::span<const ScanRow> rows) {
  std::string out = "n,t,s,principle,witnesses,deduced_axes,direct_axes,sound,complete\n";
  for (const ScanRow& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.t);
    out += ',';
    out += std::to_string(r.s);
    out += ',';
    out += to_string(r.principle);
    out += ',';
    out += std::to_string(r.witnesses);
    out += ',';
    out += std::to_string(r.deduced_axes);
    out += ',';
    out += std::to_string(r.direct_axes);
    out += ',';
    out += r.sound ? "true" : "false";
    out += ',';
    out += r.complete ? (*r.complete ? "true" : "false") : "na";
    out += '\n';
  }
  return out;
}

}  // namespace copkit
