#pragma once

#include <vector>

#include "mtl/chain.hpp"

namespace mtl {

/// A filter of a chain, stored as the index of its minimal element, which is
/// always idempotent: every filter of a finite chain is the up-set of a
/// unique idempotent.  Values are meaningful relative to the chain they were
/// computed from.
struct Filter {
  int least = 0;
  bool operator==(const Filter&) const = default;
};

/// The three equivalent conditions characterizing finite archimedean chains,
/// each computed independently so the equivalence stays testable instead of
/// assumed.
struct ArchStatus {
  bool archimedean = false;         // every y < 1 powers down below every x <= y
  bool simple = false;              // no proper nontrivial filter
  bool idempotents_trivial = false; // idempotents are exactly {0, 1}
};

struct Quotient {
  Chain algebra;
  std::vector<int> projection;  // parent index -> class index
};

/// { a : a*a = a }, ascending.  Always contains 0 and the unit.
std::vector<int> idempotents(const Chain& c);

/// Nonzero idempotents e with e*x = x for every x <= e, ascending.
std::vector<int> local_units(const Chain& c);

/// True iff every nonzero idempotent is a local unit.
bool is_locally_unital(const Chain& c);

/// Throws Error(trivial_chain) for the one-element chain.
ArchStatus archimedean_status(const Chain& c);

/// The filter generated by x: the up-set of the stabilized power of x.
Filter generated_filter(const Chain& c, int x);

/// One filter per idempotent, ordered by least element descending (trivial
/// filter first, improper filter last).
std::vector<Filter> all_filters(const Chain& c);

/// Literal primality: 0 is not in F, and x v y in F entails x in F or
/// y in F.  On a chain this holds exactly for the proper filters.
bool is_prime(const Chain& c, Filter f);

/// Quotient by the congruence a ~ b iff a->b and b->a lie in the filter.
/// Classes are convex intervals, numbered ascending by their minimum.
Quotient quotient(const Chain& c, Filter f);

/// eM: the image of the idempotent e, an MTL-chain with unit e, re-indexed
/// ascending.  Throws Error(not_idempotent).
Chain scale(const Chain& c, int e);

/// The up-set of an idempotent as a chain in its own right, with the product
/// restricted and the residuum recomputed inside the carrier.
Chain up_set_chain(const Chain& c, int e);

}  // namespace mtl
