#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtl/chain.hpp"
#include "mtl/structure.hpp"

namespace mtl {

/// One multiplication table mu[i][j] : C_i x C_j -> C_{i*j}, row-major in
/// block-local indices (0 is each block's minimum).
using MuTable = std::vector<std::vector<int>>;

/// Data of a generalized chain product: an index algebra A, the filter F
/// whose carrier is the block at A's unit, per-index block sizes, and the
/// multiplication family mu.  Blocks other than the top one are bare chains
/// with no internal unit; only F carries algebra structure.
struct GcpSpec {
  Chain index_algebra;                  // A
  Chain filter;                         // F, the block at A's unit
  std::vector<int> blocks;              // block size per A-index, ascending
  std::vector<std::vector<MuTable>> mu;  // mu[i][j] for every ordered pair
};

/// One validated condition with the first offending indices and a short note
/// naming them.
struct Condition {
  bool ok = true;
  std::vector<int> witness;
  std::string note;
};

/// The block wellformedness and the five family conditions, each computed
/// independently, plus the full axiom check of the assembled table.  The
/// assembled check is deliberately separate: the five conditions do not
/// obviously force cross-block monotonicity, so the assembled table is never
/// trusted to be a chain without re-validation.
struct ConditionReport {
  Condition wellformed;   // shapes, ranges, F sitting at the top index
  Condition monotone;     // (i)  monotone in each coordinate
  Condition zero;         // (ii) both zero-annihilation identities, as printed
  Condition zero_weak;    // the single instance the quotient argument needs
  Condition associative;  // (iii) jointly associative
  Condition commutative;  // (iv)  jointly commutative
  Condition global_unit;  // (v)   1_F acts as identity on every block
  std::optional<AxiomReport> assembled;  // present when (i)-(v) hold

  /// Wellformed and (i)-(v); zero_weak is diagnostic only.
  bool conditions_ok() const {
    return wellformed.ok && monotone.ok && zero.ok && associative.ok && commutative.ok &&
           global_unit.ok;
  }
  bool ok() const { return conditions_ok() && assembled && assembled->valid(); }
};

/// Checks every condition exhaustively with first witnesses.  Structural
/// nonsense (ragged tables, wrong counts) throws Error(malformed_spec);
/// value-level problems are report entries.
ConditionReport validate_gcp(const GcpSpec& spec);

struct Assembled {
  Chain chain;
  std::vector<std::pair<int, int>> block_of;  // E index -> (A index, local index)
};

/// Stacks the blocks into one chain with product mu and unit 1_F.  Throws
/// Error(conditions_failed) when (i)-(v) fail and
/// AxiomViolation(assembled_not_mtl) when the conditions hold but the
/// assembled table is not an MTL-chain.
Assembled assemble(const GcpSpec& spec);

/// Extracts the spec of an extension: A is the quotient by f, blocks are the
/// congruence classes (the class of the unit is F), and mu restricts the
/// product of e to class pairs.  Throws Error(not_a_filter).
GcpSpec gcp_from_extension(const Chain& e, Filter f);

/// The textbook translation of an ordinal sum, built verbatim: the index
/// algebra is the minimum-product chain on the family, the top component
/// keeps its unit, lower components drop theirs, and mu is componentwise on
/// equal indices with the lower element winning across indices.  Returned
/// without validation on purpose: the construction can violate the strict
/// zero-annihilation condition, and callers are expected to run validate_gcp
/// and report.  Throws Error(empty_family) and Error(component_too_small).
GcpSpec gcp_from_ordinal_sum(const std::vector<Chain>& family);

}  // namespace mtl
