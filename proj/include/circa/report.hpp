#pragma once

/**
 * @file report.hpp
 * @brief JSON forms of certificates, condition catalogs and scan reports.
 *
 * Key order is fixed (ordered_json). Rationals are serialized as strings in
 * the `a` / `a/b` row grammar so no precision is lost.
 */

#include <optional>
#include <vector>

#include "circa/conditions.hpp"
#include "circa/families.hpp"
#include "json.hpp"

namespace circa {

using Json = nlohmann::ordered_json;

/// {n, row, screen: {d: value}, vanishing, verdict, decided_by, witness_d?, determinant?}
Json to_json(const Certificate& cert);

/// {n, conditions: [{d, coeffs}], templates?: {shape, conditions, matches, mismatches,
/// printed_discrepancies}}
Json conditions_to_json(std::uint64_t n, const std::vector<DivisorCondition>& conditions,
                        bool with_templates);

/// Inverse of the `conditions` array above; validates shape and sizes.
std::vector<DivisorCondition> conditions_from_json(const Json& doc);

Json to_json(const ZeroOneReport& report);
Json to_json(const TagGrid& grid);
Json to_json(const std::vector<QuarterPrimePair>& pairs);

}  // namespace circa
