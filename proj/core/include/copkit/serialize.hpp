#pragma once

#include <span>
#include <string>
#include <string_view>

#include "copkit/ccop.hpp"
#include "copkit/cop.hpp"
#include "copkit/expansion.hpp"
#include "copkit/surd.hpp"

namespace copkit {

std::string_view to_string(Principle p);
Principle principle_from_string(std::string_view s);

/// `{"base":...,"degenerate":[c,c]|null,"n":...,"real_axes":[[low,high],...],
///   "weights":[...]}` — keys sorted, stable float-free formatting.
std::string export_json(const Cop& cop);

/// Bundle of one cCoP: points, axes and nu_complex.
std::string export_json(const CcopBundle& bundle);

/// Certificate array. When a report is supplied each certificate's "sound"
/// field reflects it; otherwise certificates are reported sound, which the
/// expansion theorem guarantees for well-formed queries.
std::string export_json(std::span<const ExpansionCertificate> certs,
                        const VerificationReport* report = nullptr);

/// Chord query result: surd, float value and the exact integer when the
/// normal form collapses to one.
std::string export_json(const SurdLength& gamma);

std::string export_json(const VerificationReport& report);

std::string export_json(std::span<const ScanRow> rows);

/// Inverse of export_json(Cop): weights reproduce exactly.
Cop parse_cop_json(const std::string& text);

/// Header row `n,t,s,principle,witnesses,deduced_axes,direct_axes,sound,complete`
/// then one row per scan entry, LF line endings.
std::string scan_csv(std::span<const ScanRow> rows);

}  // namespace copkit
