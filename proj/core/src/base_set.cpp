#include "copkit/base_set.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "copkit/errors.hpp"

namespace copkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<natural> finalize_elements(std::vector<natural> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

BaseSet BaseSet::naturals() { return BaseSet(Kind::naturals, kUnbounded); }

BaseSet BaseSet::odds() { return BaseSet(Kind::odds, kUnbounded); }

BaseSet BaseSet::primes(natural bound) {
  if (bound < 2) throw InvalidBoundError("prime sieve bound must be at least 2");
  BaseSet s(Kind::primes, bound);
  s.member_.assign(bound + 1, true);
  s.member_[0] = s.member_[1] = false;
  for (natural p = 2; p * p <= bound; ++p) {
    if (!s.member_[p]) continue;
    for (natural q = p * p; q <= bound; q += p) s.member_[q] = false;
  }
  for (natural v = 2; v <= bound; ++v) {
    if (s.member_[v]) s.elements_.push_back(v);
  }
  return s;
}

BaseSet BaseSet::custom(std::vector<natural> elements) {
  elements = finalize_elements(std::move(elements));
  if (elements.empty()) throw EmptySetError("custom base set has no elements");
  if (elements.front() == 0) throw ParseError("custom base set may not contain 0");
  BaseSet s(Kind::custom, elements.back());
  s.member_.assign(s.bound_ + 1, false);
  for (natural e : elements) s.member_[e] = true;
  s.elements_ = std::move(elements);
  return s;
}

BaseSet BaseSet::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open base-set file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<natural> values;

  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ": line 1: invalid JSON array: " + e.what());
    }
    if (!doc.is_array()) throw ParseError(path + ": line 1: expected a JSON array of naturals");
    for (const auto& item : doc) {
      if (!item.is_number_unsigned() || item.get<natural>() == 0) {
        throw ParseError(path + ": line 1: entry " + item.dump() + " is not a natural >= 1");
      }
      values.push_back(item.get<natural>());
    }
  } else {
    std::istringstream lines(text);
    std::string raw;
    for (natural lineno = 1; std::getline(lines, raw); ++lineno) {
      const std::string_view line = trim(raw);
      if (line.empty() || line.front() == '#') continue;
      natural v = 0;
      const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
      if (ec != std::errc() || ptr != line.data() + line.size() || v == 0) {
        throw ParseError(path + ": line " + std::to_string(lineno) + ": '" + std::string(line) +
                         "' is not a natural >= 1");
      }
      values.push_back(v);
    }
  }

  if (values.empty()) throw EmptySetError("base-set file has no elements: " + path);
  return custom(std::move(values));
}

std::string BaseSet::name() const {
  switch (kind_) {
    case Kind::naturals: return "naturals";
    case Kind::primes: return "primes";
    case Kind::odds: return "odds";
    case Kind::custom: return "custom";
  }
  return "?";
}

bool BaseSet::contains(natural x) const {
  switch (kind_) {
    case Kind::naturals:
      return x >= 1;
    case Kind::odds:
      return x >= 1 && x % 2 == 1;
    case Kind::primes:
    case Kind::custom:
      if (x > bound_) {
        throw MaterializedBoundError(name() + " set materialized to " + std::to_string(bound_) +
                                     ", cannot answer membership of " + std::to_string(x));
      }
      return x <= bound_ && member_[x];
  }
  return false;
}

const std::vector<natural>& BaseSet::elements() const {
  if (analytic()) throw Error("analytic base set has no stored element list; use elements_up_to");
  return elements_;
}

std::vector<natural> BaseSet::elements_up_to(natural hi) const {
  if (hi > bound_) {
    throw MaterializedBoundError(name() + " set materialized to " + std::to_string(bound_) +
                                 ", cannot enumerate up to " + std::to_string(hi));
  }
  std::vector<natural> out;
  switch (kind_) {
    case Kind::naturals:
      out.reserve(hi);
      for (natural v = 1; v <= hi; ++v) out.push_back(v);
      break;
    case Kind::odds:
      out.reserve(hi / 2 + 1);
      for (natural v = 1; v <= hi; v += 2) out.push_back(v);
      break;
    case Kind::primes:
    case Kind::custom: {
      const auto end = std::upper_bound(elements_.begin(), elements_.end(), hi);
      out.assign(elements_.begin(), end);
      break;
    }
  }
  return out;
}

natural BaseSet::min_element() const {
  switch (kind_) {
    case Kind::naturals:
    case Kind::odds:
      return 1;
    case Kind::primes:
    case Kind::custom:
      return elements_.front();
  }
  return 1;
}

std::string BaseSet::serialize() const {
  if (analytic()) throw Error("refusing to serialize an unbounded base set");
  std::string out;
  for (natural e : elements_) {
    out += std::to_string(e);
    out += '\n';
  }
  return out;
}

}  // namespace copkit
