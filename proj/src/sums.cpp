#include "mtl/sums.hpp"

#include <string>

#include "mtl/structure.hpp"

namespace mtl {

Chain ordinal_sum(const std::vector<Chain>& components) {
  std::vector<const Chain*> kept;
  for (const Chain& c : components)
    if (c.size() >= 2) kept.push_back(&c);  // one-element summands are neutral

  int n = 1;
  std::vector<int> offset(kept.size());
  for (size_t k = 0; k < kept.size(); ++k) {
    offset[k] = n - 1;
    n += kept[k]->size() - 1;
  }
  if (kept.empty()) return make_chain(1, std::vector<int>{0});

  const int top = n - 1;
  auto block_of = [&](int x) {
    size_t k = kept.size() - 1;
    while (x < offset[k]) --k;
    return k;
  };

  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v;
      if (x == top)
        v = y;
      else if (y == top)
        v = x;
      else {
        size_t bx = block_of(x), by = block_of(y);
        if (bx == by)
          v = offset[bx] + kept[bx]->prod(x - offset[bx], y - offset[by]);
        else
          v = bx < by ? x : y;  // the lower component's element wins
      }
      table[x * n + y] = v;
    }
  return make_chain(n, table);
}

Decomposition decompose(const Chain& c) {
  if (c.size() < 2) throw Error(Reason::trivial_chain, "one-element chains have no decomposition");

  std::vector<int> lu = local_units(c);
  for (int e : idempotents(c)) {
    if (e == 0) continue;
    bool found = false;
    for (int u : lu) found = found || u == e;
    if (!found)
      throw Error(Reason::not_locally_unital,
                  "idempotent " + std::to_string(e) + " is not a local unit", e);
  }

  if (lu.size() == 1) return Decomposition{{c}, lu};

  // Peel the up-set of the largest non-unit local unit, then recurse on the
  // scaled remainder.
  int e = lu[lu.size() - 2];
  Decomposition rest = decompose(scale(c, e));
  rest.components.push_back(up_set_chain(c, e));
  rest.boundaries = lu;
  return rest;
}

}  // namespace mtl
