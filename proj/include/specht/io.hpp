#pragma once

// JSON and text renderings shared by the CLI and tests.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "decomposition.hpp"
#include "parameters.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "verification.hpp"

namespace specht {

using nlohmann::json;

inline json partition_to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

/// Integers within int64 become JSON numbers, larger ones decimal strings.
inline json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

// ---------------------------------------------------------------------------
// GrothendieckVector: [{"label": "S"|"D", "partition": [...], "coeff": int}, ...]

inline json to_json(const GrothendieckVector& v) {
  json arr = json::array();
  for (const auto& [key, c] : v.terms()) {
    arr.push_back({{"label", std::string(label_letter(key.label))},
                   {"partition", partition_to_json(key.partition)},
                   {"coeff", c}});
  }
  return arr;
}

inline GrothendieckVector grothendieck_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "Grothendieck vector JSON must be an array");
  GrothendieckVector v;
  for (const auto& term : j) {
    const std::string label = term.at("label").get<std::string>();
    if (label != "S" && label != "D") throw Error(ErrorKind::InvalidInput, "label must be \"S\" or \"D\"");
    v.add(label == "S" ? ClassLabel::Specht : ClassLabel::Irreducible, partition_from_json(term.at("partition")),
          term.at("coeff").get<std::int64_t>());
  }
  return v;
}

// ---------------------------------------------------------------------------

inline json to_json(const AChain& chain) {
  json elements = json::array();
  for (const auto& el : chain.elements) elements.push_back(partition_to_json(el));
  return {{"m", chain.m}, {"elements", elements}, {"reducible", chain.size() >= 2}};
}

inline json to_json(const RationalPolynomial& poly) {
  json coeffs = json::array();
  for (const auto& c : poly.coefficients()) coeffs.push_back(detail::rational_string(c));
  return {{"text", to_string(poly)}, {"coefficients", coeffs}};
}

inline json to_json(const PiecewiseCongruencePolynomial& table) {
  json cases = json::array();
  for (const auto& [m, poly] : table.cases) {
    json entry = to_json(poly);
    entry["residue"] = m;
    cases.push_back(entry);
  }
  return {{"modulus", "n ≡ m (mod p)"},
          {"cases", cases},
          {"default", to_json(table.default_case)},
          {"max_residue", table.max_residue},
          {"beyond_range_generic", table.beyond_range_generic}};
}

inline json to_json(const std::vector<ParameterPair>& pairs) {
  json arr = json::array();
  for (const auto& pr : pairs) arr.push_back({{"t", bigint_to_json(pr.t)}, {"p", bigint_to_json(pr.p)}});
  return arr;
}

// ---------------------------------------------------------------------------
// VerificationReport: {"grid": [...], "summary": {...}}

inline json to_json(const VerificationRecord& r) {
  json j = {{"mu", partition_to_json(r.mu)},
            {"p", r.p},
            {"n", r.n},
            {"m", r.m},
            {"formula_dim", r.formula_dim ? bigint_to_json(*r.formula_dim) : json(nullptr)},
            {"oracle_dim", r.oracle_dim ? bigint_to_json(*r.oracle_dim) : json(nullptr)},
            {"match", r.match},
            {"in_regime", r.in_regime},
            {"conjecture_hypothesis", r.conjecture_hypothesis},
            {"note", r.note},
            {"error", r.error ? json(*r.error) : json(nullptr)},
            {"error_kind", r.error_kind ? json(std::string(to_string(*r.error_kind))) : json(nullptr)}};
  return j;
}

inline json to_json(const VerificationSummary& s) {
  return {{"records", s.records},
          {"in_regime", s.in_regime},
          {"out_of_regime", s.out_of_regime},
          {"matches", s.matches},
          {"mismatches", s.mismatches},
          {"conjecture_records", s.conjecture_records},
          {"conjecture_mismatches", s.conjecture_mismatches},
          {"errors", s.errors}};
}

inline json to_json(const VerificationReport& report) {
  json grid = json::array();
  for (const auto& r : report.grid) grid.push_back(to_json(r));
  return {{"grid", grid}, {"summary", to_json(report.summary)}};
}

namespace detail {

inline ErrorKind error_kind_from_string(const std::string& s) {
  for (auto kind : {ErrorKind::InvalidInput, ErrorKind::SizeMismatch, ErrorKind::NotPrime, ErrorKind::EmptyPartition,
                    ErrorKind::SizeError, ErrorKind::NotTotallyOrdered, ErrorKind::FamilyIncomplete,
                    ErrorKind::NotStabilized, ErrorKind::TooLarge, ErrorKind::SearchExhausted}) {
    if (to_string(kind) == s) return kind;
  }
  throw Error(ErrorKind::InvalidInput, "unknown error kind '" + s + "'");
}

}  // namespace detail

inline VerificationReport verification_report_from_json(const json& j) {
  VerificationReport report;
  for (const auto& e : j.at("grid")) {
    VerificationRecord r;
    r.mu = partition_from_json(e.at("mu"));
    r.p = e.at("p").get<std::uint64_t>();
    r.n = e.at("n").get<int>();
    r.m = e.at("m").get<int>();
    if (!e.at("formula_dim").is_null()) r.formula_dim = bigint_from_json(e.at("formula_dim"));
    if (!e.at("oracle_dim").is_null()) r.oracle_dim = bigint_from_json(e.at("oracle_dim"));
    r.match = e.at("match").get<bool>();
    r.in_regime = e.at("in_regime").get<bool>();
    r.conjecture_hypothesis = e.at("conjecture_hypothesis").get<bool>();
    r.note = e.at("note").get<std::string>();
    if (!e.at("error").is_null()) r.error = e.at("error").get<std::string>();
    if (!e.at("error_kind").is_null()) r.error_kind = detail::error_kind_from_string(e.at("error_kind").get<std::string>());
    report.grid.push_back(std::move(r));
  }
  const auto& s = j.at("summary");
  report.summary.records = s.at("records").get<std::size_t>();
  report.summary.in_regime = s.at("in_regime").get<std::size_t>();
  report.summary.out_of_regime = s.at("out_of_regime").get<std::size_t>();
  report.summary.matches = s.at("matches").get<std::size_t>();
  report.summary.mismatches = s.at("mismatches").get<std::size_t>();
  report.summary.conjecture_records = s.at("conjecture_records").get<std::size_t>();
  report.summary.conjecture_mismatches = s.at("conjecture_mismatches").get<std::size_t>();
  report.summary.errors = s.at("errors").get<std::size_t>();
  return report;
}

}  // namespace specht
