#pragma once

#include <vector>

#include "mtl/chain.hpp"

namespace mtl {

/// Ordinal-sum decomposition into archimedean components, listed bottom to
/// top.  boundaries are the parent's local units ascending (the last one is
/// the unit); there is one component per local unit.
struct Decomposition {
  std::vector<Chain> components;
  std::vector<int> boundaries;
};

/// Stacks the components bottom to top, all sharing one unit: products inside
/// a component are componentwise, across components the lower element wins.
/// One-element components are neutral and dropped; the empty stack is the
/// one-element chain.
Chain ordinal_sum(const std::vector<Chain>& components);

/// Peels a locally unital chain into archimedean components from the top:
/// the up-set of the largest non-unit local unit comes off first, then the
/// scaled remainder is peeled recursively.  Throws Error(trivial_chain) for
/// n = 1 and Error(not_locally_unital) with the offending idempotent as
/// witness otherwise.
Decomposition decompose(const Chain& c);

}  // namespace mtl
