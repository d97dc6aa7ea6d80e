#pragma once

#include <vector>

#include "json.hpp"
#include "mexcrank/verify.hpp"

namespace mexcrank::verify {

/// {check_id, params, variant, relation, lhs, rhs, pass[, expected_exception]}.
/// Integers (parameters included) are decimal strings.
nlohmann::ordered_json to_json(const Record& record,
                               const std::string& check_id);

/// {check_id, anchor, pass, summary, first_counterexample, records}.
/// `include_passing = false` keeps only failures and expected exceptions.
nlohmann::ordered_json to_json(const VerificationReport& report,
                               const IdentityCheck& check,
                               bool include_passing = true);

}  // namespace mexcrank::verify
