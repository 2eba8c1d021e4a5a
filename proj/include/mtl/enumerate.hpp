#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtl/chain.hpp"

namespace mtl {

/// Streams every MTL-chain of size n exactly once, in lexicographic table
/// order.  Backtracks over the free upper-triangle cells with monotonicity
/// bounds and incremental associativity pruning.
void enumerate_chains(int n, const std::function<void(const Chain&)>& sink);

/// Materialized enumeration.  workers > 1 partitions the search by first-row
/// prefix; the merged output order is identical to the single-worker run.
std::vector<Chain> enumerate_chains(int n, int workers = 1);

enum class Tag {
  archimedean,
  simple,
  trivial_idempotents,
  locally_unital,
  idempotent_product,
};

const char* tag_name(Tag t);
std::optional<Tag> parse_tag(const std::string& name);

/// Classification tags of a chain.  The one-element chain gets only
/// locally_unital and idempotent_product; the archimedean/simple/trivial
/// tags are reserved for chains with at least two elements.
std::vector<Tag> classify(const Chain& c);
bool has_tag(const Chain& c, Tag t);

/// Result of machine-checking one registered claim over the enumerated
/// universe.  Counterexamples are full witness documents replayable through
/// the public operations; info carries claim-specific extras (for instance
/// the strict-versus-weak zero-annihilation summary, or informational
/// findings with no pass/fail weight).
struct ClaimReport {
  std::string claim_id;
  int max_size = 0;
  std::vector<int> sizes;
  long long instances = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json info = nlohmann::json::object();

  bool pass() const { return counterexamples.empty(); }
  const char* verdict() const { return pass() ? "pass" : "violations"; }
};

std::vector<std::string> registered_claims();

/// Runs one claim over every enumerated chain (and the derived filters,
/// sequences, families and specs) up to max_size.  Throws
/// Error(unknown_claim) for an unregistered id.
ClaimReport verify_claim(const std::string& claim_id, int max_size, int workers = 1);

}  // namespace mtl
