#pragma once

#include <array>
#include <string>
#include <vector>

#include "mtl/errors.hpp"

namespace mtl {

/// Outcome of one verification item: pass, or the first offending indices in
/// scan order.  Unused witness slots stay -1.
struct Check {
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};
};

/// Itemized validation of an n-by-n product table against the chain axioms.
/// On a finite chain the residuation law is equivalent to monotonicity of the
/// product, so the monotone item doubles as the residuation check;
/// prelinearity holds on every chain and is not a table property.
///
/// Witness layouts: unit/bottom/commutative hold the (row, col) of the bad
/// entry; associative holds the triple (a, b, c); monotone holds (a, a+1, b),
/// the two rows and the column where the product decreases.
struct AxiomReport {
  int size = 0;
  Check unit;
  Check bottom;
  Check commutative;
  Check associative;
  Check monotone;

  bool valid() const {
    return unit.ok && bottom.ok && commutative.ok && associative.ok && monotone.ok;
  }
};

std::string describe(const AxiomReport& report);

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(AxiomReport report, Reason reason = Reason::axiom_violation);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// A finite MTL-chain on the carrier {0, ..., n-1} with its natural order:
/// index 0 is the bottom, n-1 the unit.  Only the product table is stored;
/// residuum, meet and join are derived.  Instances are immutable and can only
/// be built through make_chain, which validates the axioms, so a Chain value
/// is always a genuine MTL-chain.  n = 1 is the one-element chain (the zero
/// object).
class Chain {
 public:
  int size() const { return n_; }
  int unit() const { return n_ - 1; }
  int prod(int a, int b) const { return table_[a * n_ + b]; }

  /// Row-major flat product table.
  const std::vector<int>& table() const { return table_; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const Chain&) const = default;

 private:
  Chain(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {}
  friend Chain make_chain(int n, const std::vector<int>& table);

  int n_;
  std::vector<int> table_;
};

/// Validates a product table and wraps it.  Throws Error(out_of_range) for a
/// malformed table and AxiomViolation when a chain axiom fails.
Chain make_chain(int n, const std::vector<std::vector<int>>& table);
Chain make_chain(int n, const std::vector<int>& table);

/// Itemized axiom check with minimal witnesses.  Throws Error(out_of_range)
/// when the table shape or an entry is malformed; axiom failures are report
/// entries, not errors.
AxiomReport check_axioms(int n, const std::vector<std::vector<int>>& table);
AxiomReport check_axioms(int n, const std::vector<int>& table);

/// x -> y = max { z : x*z <= y }.  Total on chains since x*0 = 0.
int residuum(const Chain& c, int x, int y);

struct IsoResult {
  bool isomorphic = false;
  /// The unique candidate map (the identity on indices) when isomorphic.
  std::vector<int> map;
};

/// Chains have a rigid carrier order, so isomorphism reduces to equal size
/// and equal tables; the identity is the only candidate map.
IsoResult are_isomorphic(const Chain& a, const Chain& b);

}  // namespace mtl
