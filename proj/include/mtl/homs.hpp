#pragma once

#include <vector>

#include "mtl/chain.hpp"

namespace mtl {

/// A carrier map between chains.  Semihoop morphisms need not preserve the
/// bottom; set preserve_bottom to check the bounded (MTL) category instead.
struct Hom {
  Chain source;
  Chain target;
  std::vector<int> map;
  bool preserve_bottom = false;
};

/// Preservation of each operation, itemized with first witnesses.  Order,
/// meet and join preservation follow from the others on chains but are
/// checked explicitly anyway.
struct HomReport {
  Check product;
  Check residuum;
  Check unit;
  Check bottom;  // trivially ok when preserve_bottom is unset
  Check order;
  Check meet;
  Check join;

  bool ok() const {
    return product.ok && residuum.ok && unit.ok && bottom.ok && order.ok && meet.ok && join.ok;
  }
};

HomReport check_hom(const Hom& h);

/// Candidate split short exact sequence 0 -> F -j-> E -p-> A -> 0 with
/// section s, all maps given as index arrays.  j is a semihoop morphism with
/// no bottom requirement (a filter embeds only that way).
struct SplitSequence {
  Chain F;
  Chain E;
  Chain A;
  std::vector<int> j;
  std::vector<int> p;
  std::vector<int> s;
};

struct SplitReport {
  HomReport j_hom;
  HomReport p_hom;
  HomReport s_hom;
  Check j_injective;
  Check p_surjective;
  Check kernel;   // image(j) equals the preimage of A's unit under p
  Check section;  // p after s is the identity on A

  bool ok() const {
    return j_hom.ok() && p_hom.ok() && s_hom.ok() && j_injective.ok && p_surjective.ok &&
           kernel.ok && section.ok;
  }
};

SplitReport check_split_exact(const SplitSequence& seq);

/// The classification test for ordinal-sum extensions: the images of j and s
/// jointly cover E and intersect only in the unit.  Requires the sequence to
/// be split exact (Error(not_exact) otherwise).  When true, E is isomorphic
/// to the ordinal sum with A below F.
bool ordinal_extension_test(const SplitSequence& seq);

}  // namespace mtl
