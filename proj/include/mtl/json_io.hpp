#pragma once

#include <utility>
#include <vector>

#include "json.hpp"
#include "mtl/chain.hpp"
#include "mtl/enumerate.hpp"
#include "mtl/gcp.hpp"
#include "mtl/homs.hpp"
#include "mtl/structure.hpp"
#include "mtl/sums.hpp"

namespace mtl {

// Chain documents: {"size": n, "product": [[...], ...]}, row-major,
// index 0 the bottom and n-1 the unit.  This format is shared by every
// module and the CLI.  All serializers emit objects whose keys re-serialize
// byte-stably (nlohmann keeps keys sorted).

nlohmann::json chain_to_json(const Chain& c);

/// Parses and validates; throws AxiomViolation / Error like make_chain, and
/// Error(out_of_range) for shape problems.
Chain chain_from_json(const nlohmann::json& j);

/// Parses without validating, for the axiom checker itself.
std::pair<int, std::vector<std::vector<int>>> raw_table_from_json(const nlohmann::json& j);

nlohmann::json check_to_json(const Check& c);
nlohmann::json axiom_report_to_json(const AxiomReport& r);

/// {"idempotents": [...], "local_units": [...], "locally_unital": b,
///  "archimedean": b, "simple": b, "filters": [least, ...]}.
/// For the one-element chain archimedean and simple are reported false.
nlohmann::json analysis_to_json(const Chain& c);

nlohmann::json quotient_to_json(const Quotient& q);
nlohmann::json decomposition_to_json(const Decomposition& d);

nlohmann::json split_sequence_to_json(const SplitSequence& s);
SplitSequence split_sequence_from_json(const nlohmann::json& j);
nlohmann::json hom_report_to_json(const HomReport& r);
nlohmann::json split_report_to_json(const SplitReport& r);

nlohmann::json gcp_to_json(const GcpSpec& s);
GcpSpec gcp_from_json(const nlohmann::json& j);
nlohmann::json condition_to_json(const Condition& c);
nlohmann::json condition_report_to_json(const ConditionReport& r);

nlohmann::json claim_report_to_json(const ClaimReport& r);

}  // namespace mtl
