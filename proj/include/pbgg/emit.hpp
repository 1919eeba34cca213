#pragma once

// Deterministic document emission.  JSON documents use sorted object keys,
// rationals rendered as canonical "p/q" strings, and arrays in the orders the
// producing modules fix, so identical inputs yield identical bytes.

#include "pbgg/bgg.hpp"
#include "pbgg/descent.hpp"
#include "pbgg/kostant.hpp"
#include "pbgg/parabolic.hpp"
#include "pbgg/repinfo.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace pbgg {

std::string root_str(const IntVector& root);          // "2a1+a2"
std::string weight_str(const RatVector& weight);      // "[2,1/2,0]"
std::string word_str(const std::vector<int>& word);   // "(1 2)" or "()"

nlohmann::json json_of_weight(const RatVector& weight);
nlohmann::json json_of_bigint(const BigInt& value);

nlohmann::json json_of_roots(const RootSystem& rs);
nlohmann::json json_of_hasse(const HasseDiagram& h, std::optional<bool> verified);
nlohmann::json json_of_kostant(const Parabolic& p, const RatVector& lambda,
                               const HomologyTable& table);
nlohmann::json json_of_bgg(const BGGDiagram& d);
nlohmann::json json_of_mult(const RootSystem& rs, const RatVector& lambda,
                            const MultiplicityTable& table,
                            const std::optional<CartanElement>& x,
                            const std::optional<BigInt>& kernel);
nlohmann::json json_of_descend(const CohomologyResult& result, std::optional<bool> verified);

std::string text_of_roots(const RootSystem& rs);
std::string text_of_hasse(const HasseDiagram& h, std::optional<bool> verified);
std::string text_of_kostant(const Parabolic& p, const RatVector& lambda,
                            const HomologyTable& table);
std::string text_of_bgg(const BGGDiagram& d);
std::string text_of_mult(const RootSystem& rs, const RatVector& lambda,
                         const MultiplicityTable& table,
                         const std::optional<CartanElement>& x,
                         const std::optional<BigInt>& kernel);
std::string text_of_descend(const CohomologyResult& result, std::optional<bool> verified);

std::string dot_of_hasse(const HasseDiagram& h);
std::string dot_of_bgg(const BGGDiagram& d);

/// Canonical byte rendering of a JSON document (2-space indent, sorted keys,
/// trailing newline).
std::string dump_json(const nlohmann::json& doc);

}  // namespace pbgg
