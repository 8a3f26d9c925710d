// copkit — circles of partition toolkit, command line front end.
//
// Exit codes: 0 ok, 1 usage/config error, 2 mathematically valid but empty
// result, 3 soundness violation, 4 I/O failure.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "copkit/base_set.hpp"
#include "copkit/ccop.hpp"
#include "copkit/cop.hpp"
#include "copkit/errors.hpp"
#include "copkit/expansion.hpp"
#include "copkit/render.hpp"
#include "copkit/serialize.hpp"

namespace {

using copkit::natural;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kEmpty = 2;
constexpr int kUnsound = 3;
constexpr int kIo = 4;

struct Settings {
  natural sieve_bound = 10000;
  std::string default_base = "naturals";
  std::optional<std::string> config_format;
  natural seed = 0;  // reserved for sampled checks
  std::string flag_format;
};

natural parse_natural(const std::string& text, const std::string& what) {
  natural v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw copkit::Error("invalid " + what + ": '" + text + "'");
  }
  return v;
}

void load_config_file(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw copkit::Error("cannot open config file: " + path);
  std::string line;
  for (natural lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string v) {
      const auto b = v.find_first_not_of(" \t\r");
      const auto e = v.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    if (strip(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw copkit::Error(path + ": line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key == "sieve_bound") {
      s.sieve_bound = parse_natural(value, "sieve_bound");
    } else if (key == "default_base") {
      s.default_base = value;
    } else if (key == "output_format") {
      s.config_format = value;
    } else if (key == "seed") {
      s.seed = parse_natural(value, "seed");
    } else {
      throw copkit::Error(path + ": unknown config key '" + key + "'");
    }
  }
}

void apply_env(Settings& s) {
  if (const char* env = std::getenv("COPKIT_SIEVE_BOUND"); env && *env) {
    s.sieve_bound = parse_natural(env, "COPKIT_SIEVE_BOUND");
  }
}

std::string resolve_format(const Settings& s, const std::string& command_default) {
  if (!s.flag_format.empty()) return s.flag_format;
  if (s.config_format) return *s.config_format;
  return command_default;
}

std::shared_ptr<const copkit::BaseSet> make_base(const std::string& name, natural sieve_bound) {
  using copkit::BaseSet;
  if (name == "nat" || name == "naturals") return std::make_shared<BaseSet>(BaseSet::naturals());
  if (name == "primes") return std::make_shared<BaseSet>(BaseSet::primes(sieve_bound));
  if (name == "odds") return std::make_shared<BaseSet>(BaseSet::odds());
  if (name.rfind("custom:", 0) == 0) {
    return std::make_shared<BaseSet>(BaseSet::load(name.substr(7)));
  }
  throw copkit::Error("unknown base name '" + name +
                      "' (expected nat, primes, odds or custom:<path>)");
}

void ensure_sieve_bound(natural required, natural sieve_bound) {
  if (required > sieve_bound) {
    throw copkit::Error("required sieve bound " + std::to_string(required) +
                        " exceeds the configured bound " + std::to_string(sieve_bound) +
                        " (raise --sieve-bound, the config, or COPKIT_SIEVE_BOUND)");
  }
}

copkit::Sign parse_sign(const std::string& text) {
  if (text == "+" || text == "1" || text == "+1" || text == "plus") return copkit::Sign::plus;
  if (text == "-" || text == "-1" || text == "minus") return copkit::Sign::minus;
  throw copkit::Error("invalid sign '" + text + "' (expected + or -)");
}

void write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw copkit::IoError("cannot open output file: " + out_path);
  out << payload;
  out.flush();
  if (!out) throw copkit::IoError("failed writing output file: " + out_path);
}

std::string cop_text(const copkit::Cop& cop) {
  std::ostringstream os;
  os << "C(" << cop.n << ", " << cop.base << ")";
  if (cop.empty()) {
    os << " is empty\n";
    return os.str();
  }
  os << "\nweights:";
  for (natural w : cop.weights) os << ' ' << w;
  const copkit::AxesList ax = axes(cop);
  os << "\nreal axes:";
  for (const copkit::Axis& a : ax.real) os << " (" << a.low << "," << a.high << ")";
  os << "\ncenter: ";
  if (ax.center) {
    os << ax.center->low;
  } else {
    os << "none";
  }
  os << "\nnu: " << nu(cop) << "\n";
  return os.str();
}

char sign_char(copkit::Sign s) { return s == copkit::Sign::plus ? '+' : '-'; }

std::string ccop_text(const copkit::CcopBundle& bundle) {
  std::ostringstream os;
  os << "C°(" << bundle.n << ", " << bundle.base << ")";
  if (bundle.points.empty()) {
    os << " is empty\n";
    return os.str();
  }
  os << "\npoints:";
  for (const copkit::CPoint& p : bundle.points) os << " (" << p.x << "," << sign_char(p.sigma) << ")";
  os << "\naxes:";
  for (const copkit::CAxis& a : bundle.axes) {
    os << " [(" << a.p.x << "," << sign_char(a.p.sigma) << ")-(" << a.q.x << ","
       << sign_char(a.q.sigma) << ")]";
    if (a.degenerate()) os << "*";
  }
  os << "\nnu_complex: " << bundle.nu_complex << "\n";
  return os.str();
}

std::string certificates_text(std::span<const copkit::ExpansionCertificate> certs,
                              const copkit::VerificationReport& report, bool with_report) {
  std::ostringstream os;
  for (size_t i = 0; i < certs.size(); ++i) {
    const auto& c = certs[i];
    os << "z=" << c.z_low << " w=" << c.w_value << " deduced=(" << c.deduced.p.x << ","
       << c.deduced.q.x << ") principle=" << copkit::to_string(c.principle)
       << " sound=" << (report.certificate_sound[i] ? "true" : "false");
    if (c.degenerate_witness) os << " degenerate-witness";
    os << "\n";
  }
  if (with_report) {
    os << "sound: " << (report.sound ? "true" : "false") << "\n";
    if (report.complete) os << "complete: " << (*report.complete ? "true" : "false") << "\n";
    os << "direct axes: " << report.direct_axis_count << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circles of partition toolkit"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  std::string config_path;
  natural flag_sieve_bound = 0;
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--sieve-bound", flag_sieve_bound, "materialization bound for sieved sets");
  app.add_option("--format", settings.flag_format, "output format: json, text or csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  // cop
  auto* cop_cmd = app.add_subcommand("cop", "build a circle of partition");
  natural cop_n = 0;
  std::string cop_base;
  cop_cmd->add_option("--n", cop_n, "generator")->required();
  cop_cmd->add_option("--base", cop_base, "base set (nat, primes, odds, custom:<path>)");

  // ccop
  auto* ccop_cmd = app.add_subcommand("ccop", "build a complex circle of partition");
  natural ccop_n = 0;
  std::string ccop_base;
  ccop_cmd->add_option("--n", ccop_n, "generator")->required();
  ccop_cmd->add_option("--base", ccop_base, "base set");

  // chord
  auto* chord_cmd = app.add_subcommand("chord", "exact chord length between two cCoP points");
  natural chord_n = 0, chord_x1 = 0, chord_x2 = 0;
  std::string chord_s1 = "+", chord_s2 = "+";
  chord_cmd->add_option("--n", chord_n, "generator")->required();
  chord_cmd->add_option("--x1", chord_x1, "first real weight")->required();
  chord_cmd->add_option("--sigma1", chord_s1, "first imaginary sign (+ or -)");
  chord_cmd->add_option("--x2", chord_x2, "second real weight")->required();
  chord_cmd->add_option("--sigma2", chord_s2, "second imaginary sign (+ or -)");

  // expand
  auto* expand_cmd = app.add_subcommand("expand", "search expansion witnesses");
  natural ex_n = 0, ex_t = 0, ex_s = 0;
  std::string ex_superset = "nat", ex_subset = "primes";
  bool ex_verify = false;
  expand_cmd->add_option("--n", ex_n, "generator of the first known cCoP")->required();
  expand_cmd->add_option("--t", ex_t, "offset of the second known cCoP")->required();
  expand_cmd->add_option("--s", ex_s, "offset of the deduced cCoP")->required();
  expand_cmd->add_option("--superset", ex_superset, "base set M");
  expand_cmd->add_option("--subset", ex_subset, "base set B, subset of M");
  expand_cmd->add_flag("--verify", ex_verify, "append the verification report");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "run expand+verify over a generator range");
  natural sc_from = 0, sc_to = 0, sc_t = 0, sc_s = 0;
  bool sc_even = false, sc_odd = false;
  std::string sc_superset = "nat", sc_subset = "primes", sc_out;
  scan_cmd->add_option("--from", sc_from, "first generator")->required();
  scan_cmd->add_option("--to", sc_to, "last generator")->required();
  scan_cmd->add_flag("--even", sc_even, "only even generators");
  scan_cmd->add_flag("--odd", sc_odd, "only odd generators");
  scan_cmd->add_option("--t", sc_t, "offset of the second known cCoP")->required();
  scan_cmd->add_option("--s", sc_s, "offset of the deduced cCoP")->required();
  scan_cmd->add_option("--superset", sc_superset, "base set M");
  scan_cmd->add_option("--subset", sc_subset, "base set B");
  scan_cmd->add_option("--out", sc_out, "write the summary to this file");

  // render
  auto* render_cmd = app.add_subcommand("render", "emit a deterministic SVG figure");
  std::string rd_kind, rd_out, rd_superset = "nat", rd_subset = "primes";
  natural rd_n = 0, rd_t = 0, rd_s = 0;
  std::vector<natural> rd_generators;
  std::vector<natural> rd_axes;
  double rd_scale = 10.0;
  render_cmd->add_option("--kind", rd_kind, "circle, big-bang or expansion")->required();
  render_cmd->add_option("--n", rd_n, "generator (circle, expansion)");
  render_cmd->add_option("--axis", rd_axes, "low weight of an axis to draw (circle)");
  render_cmd->add_option("--generators", rd_generators, "generator list (big-bang)")
      ->delimiter(',');
  render_cmd->add_option("--t", rd_t, "offset of the second known cCoP (expansion)");
  render_cmd->add_option("--s", rd_s, "offset of the deduced cCoP (expansion)");
  render_cmd->add_option("--superset", rd_superset, "base set M (expansion)");
  render_cmd->add_option("--subset", rd_subset, "base set B (expansion)");
  render_cmd->add_option("--scale", rd_scale, "canvas units per integer");
  render_cmd->add_option("--out", rd_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string command_default_format = scan_cmd->parsed() ? "csv" : "json";

  try {
    if (!config_path.empty()) load_config_file(config_path, settings);
    apply_env(settings);
    if (flag_sieve_bound != 0) settings.sieve_bound = flag_sieve_bound;
    const std::string format = resolve_format(settings, command_default_format);
    if (format == "csv" && !scan_cmd->parsed()) {
      throw copkit::Error("format csv is only supported by the scan command");
    }

    if (cop_cmd->parsed()) {
      if (cop_base.empty()) cop_base = settings.default_base;
      ensure_sieve_bound(cop_n, settings.sieve_bound);
      const auto base = make_base(cop_base, settings.sieve_bound);
      const copkit::Cop cop = copkit::cop_build(cop_n, *base);
      write_output(format == "json" ? copkit::export_json(cop) + "\n" : cop_text(cop), "");
      return cop.empty() ? kEmpty : kOk;
    }

    if (ccop_cmd->parsed()) {
      if (ccop_base.empty()) ccop_base = settings.default_base;
      ensure_sieve_bound(ccop_n, settings.sieve_bound);
      const auto base = make_base(ccop_base, settings.sieve_bound);
      const copkit::CcopBundle bundle = copkit::ccop_build(ccop_n, *base);
      write_output(format == "json" ? copkit::export_json(bundle) + "\n" : ccop_text(bundle), "");
      return bundle.points.empty() ? kEmpty : kOk;
    }

    if (chord_cmd->parsed()) {
      ensure_sieve_bound(chord_n, settings.sieve_bound);
      const copkit::CPoint p = copkit::make_cpoint(chord_n, chord_x1, parse_sign(chord_s1));
      const copkit::CPoint q = copkit::make_cpoint(chord_n, chord_x2, parse_sign(chord_s2));
      const copkit::SurdLength gamma = copkit::chord_gamma(p, q);
      if (format == "json") {
        write_output(copkit::export_json(gamma) + "\n", "");
      } else {
        std::ostringstream os;
        os << "Gamma((" << chord_x1 << "," << chord_s1 << "),(" << chord_x2 << "," << chord_s2
           << ")) = ";
        if (auto exact = gamma.exact_integer()) {
          os << *exact << " (exact)";
        } else if (gamma.b() == 0) {
          os << "sqrt(" << gamma.a() << ") = " << gamma.value();
        } else {
          os << "|sqrt(" << gamma.a() << ") " << static_cast<char>(gamma.op()) << " sqrt("
             << gamma.b() << ")| = " << gamma.value();
        }
        os << "\n";
        write_output(os.str(), "");
      }
      return kOk;
    }

    if (expand_cmd->parsed()) {
      ensure_sieve_bound(ex_n + std::max(ex_t, ex_s), settings.sieve_bound);
      const auto superset = make_base(ex_superset, settings.sieve_bound);
      const auto subset = make_base(ex_subset, settings.sieve_bound);
      const copkit::ExpansionQuery query = copkit::make_query(ex_n, ex_t, ex_s, superset, subset);
      const auto certs = copkit::expand(query);
      const auto report = copkit::verify_certificates(query, certs);
      if (format == "json") {
        std::string payload = copkit::export_json(std::span(certs), &report);
        if (ex_verify) {
          payload = "{\"certificates\":" + payload + ",\"report\":" +
                    copkit::export_json(report) + "}";
        }
        write_output(payload + "\n", "");
      } else {
        write_output(certificates_text(certs, report, ex_verify), "");
      }
      if (!report.sound) return kUnsound;
      return certs.empty() ? kEmpty : kOk;
    }

    if (scan_cmd->parsed()) {
      if (sc_even && sc_odd) throw copkit::Error("--even and --odd are mutually exclusive");
      ensure_sieve_bound(sc_to + std::max(sc_t, sc_s), settings.sieve_bound);
      const auto superset = make_base(sc_superset, settings.sieve_bound);
      const auto subset = make_base(sc_subset, settings.sieve_bound);
      const copkit::Parity parity =
          sc_even ? copkit::Parity::even : sc_odd ? copkit::Parity::odd : copkit::Parity::any;
      const auto rows = copkit::scan(sc_from, sc_to, parity, sc_t, sc_s, superset, subset);
      const std::string payload =
          format == "json" ? copkit::export_json(std::span(rows)) + "\n" : copkit::scan_csv(rows);
      write_output(payload, sc_out);
      const bool all_sound =
          std::all_of(rows.begin(), rows.end(), [](const copkit::ScanRow& r) { return r.sound; });
      return all_sound ? kOk : kUnsound;
    }

    if (render_cmd->parsed()) {
      copkit::FigureSpec spec;
      if (rd_kind == "circle") {
        if (rd_n == 0) throw copkit::Error("render --kind circle needs --n");
        ensure_sieve_bound(rd_n, settings.sieve_bound);
        std::vector<copkit::CAxis> axes;
        for (natural low : rd_axes) axes.push_back(copkit::make_caxis(rd_n, low, copkit::Sign::plus));
        spec = copkit::figure_circle(rd_n, axes, rd_scale);
      } else if (rd_kind == "big-bang") {
        if (rd_generators.empty()) throw copkit::Error("render --kind big-bang needs --generators");
        ensure_sieve_bound(*std::max_element(rd_generators.begin(), rd_generators.end()),
                           settings.sieve_bound);
        spec = copkit::figure_big_bang(rd_generators, rd_scale);
      } else if (rd_kind == "expansion") {
        if (rd_n == 0 || rd_t == 0 || rd_s == 0) {
          throw copkit::Error("render --kind expansion needs --n, --t and --s");
        }
        ensure_sieve_bound(rd_n + std::max(rd_t, rd_s), settings.sieve_bound);
        const auto superset = make_base(rd_superset, settings.sieve_bound);
        const auto subset = make_base(rd_subset, settings.sieve_bound);
        const auto query = copkit::make_query(rd_n, rd_t, rd_s, superset, subset);
        const auto certs = copkit::expand(query);
        if (certs.empty()) {
          std::cerr << "error: no witnesses, nothing to draw\n";
          return kEmpty;
        }
        spec = copkit::figure_expansion(certs, rd_scale);
      } else {
        throw copkit::Error("unknown figure kind '" + rd_kind +
                            "' (expected circle, big-bang or expansion)");
      }
      write_output(copkit::render_svg(spec), rd_out);
      return kOk;
    }

    throw copkit::Error("no subcommand given");
  } catch (const copkit::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
