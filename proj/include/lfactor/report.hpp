#pragma once

#include <string>

#include "json.hpp"
#include "lfactor/lfactor.hpp"

namespace lfac {

// Structured report: group, rep, degree, shift_exponents (2⟨ρ,γ̌⟩ per dominant weight),
// factors [{q2, z, mult}] of the Satake side, equal.
nlohmann::json report_json(const std::string& group, const std::string& rep, const TheoremReport& r);

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);
// Parse then dump again; identity on canonical input.
std::string recanonicalize(const std::string& text);

std::string text_report(const RootDatum& d, const std::string& group, const std::string& rep, const TheoremReport& r);

std::string roots_str(const RootDatum& d, const std::vector<int>& idx);

}  // namespace lfac
