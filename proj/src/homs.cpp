#include "mtl/homs.hpp"

#include <algorithm>

namespace mtl {

HomReport check_hom(const Hom& h) {
  const int ns = h.source.size();
  const int nt = h.target.size();
  if (static_cast<int>(h.map.size()) != ns)
    throw Error(Reason::out_of_range, "mapping must cover the source carrier");
  for (int v : h.map)
    if (v < 0 || v >= nt) throw Error(Reason::out_of_range, "mapping value out of range");

  HomReport r;
  const auto& m = h.map;

  for (int x = 0; x < ns && r.product.ok; ++x)
    for (int y = 0; y < ns && r.product.ok; ++y)
      if (m[h.source.prod(x, y)] != h.target.prod(m[x], m[y])) r.product = {false, {x, y, -1}};

  for (int x = 0; x < ns && r.residuum.ok; ++x)
    for (int y = 0; y < ns && r.residuum.ok; ++y)
      if (m[mtl::residuum(h.source, x, y)] != mtl::residuum(h.target, m[x], m[y]))
        r.residuum = {false, {x, y, -1}};

  if (m[ns - 1] != nt - 1) r.unit = {false, {ns - 1, -1, -1}};
  if (h.preserve_bottom && m[0] != 0) r.bottom = {false, {0, -1, -1}};

  for (int x = 0; x < ns && r.order.ok; ++x)
    for (int y = x; y < ns && r.order.ok; ++y)
      if (m[x] > m[y]) r.order = {false, {x, y, -1}};

  for (int x = 0; x < ns && r.meet.ok; ++x)
    for (int y = 0; y < ns && r.meet.ok; ++y)
      if (m[std::min(x, y)] != std::min(m[x], m[y])) r.meet = {false, {x, y, -1}};

  for (int x = 0; x < ns && r.join.ok; ++x)
    for (int y = 0; y < ns && r.join.ok; ++y)
      if (m[std::max(x, y)] != std::max(m[x], m[y])) r.join = {false, {x, y, -1}};

  return r;
}

SplitReport check_split_exact(const SplitSequence& seq) {
  SplitReport r;
  r.j_hom = check_hom(Hom{seq.F, seq.E, seq.j, false});
  r.p_hom = check_hom(Hom{seq.E, seq.A, seq.p, false});
  r.s_hom = check_hom(Hom{seq.A, seq.E, seq.s, false});

  for (int x = 0; x < seq.F.size() && r.j_injective.ok; ++x)
    for (int y = x + 1; y < seq.F.size() && r.j_injective.ok; ++y)
      if (seq.j[x] == seq.j[y]) r.j_injective = {false, {x, y, -1}};

  std::vector<bool> hit(seq.A.size(), false);
  for (int x = 0; x < seq.E.size(); ++x) hit[seq.p[x]] = true;
  for (int a = 0; a < seq.A.size() && r.p_surjective.ok; ++a)
    if (!hit[a]) r.p_surjective = {false, {a, -1, -1}};

  // Exactness at E: the image of j is exactly the preimage of A's unit.
  std::vector<bool> in_j(seq.E.size(), false);
  for (int x = 0; x < seq.F.size(); ++x) in_j[seq.j[x]] = true;
  for (int x = 0; x < seq.E.size() && r.kernel.ok; ++x)
    if (in_j[x] != (seq.p[x] == seq.A.unit())) r.kernel = {false, {x, -1, -1}};

  for (int a = 0; a < seq.A.size() && r.section.ok; ++a)
    if (seq.p[seq.s[a]] != a) r.section = {false, {a, -1, -1}};

  return r;
}

bool ordinal_extension_test(const SplitSequence& seq) {
  if (!check_split_exact(seq).ok())
    throw Error(Reason::not_exact, "sequence is not a split short exact sequence");

  std::vector<bool> in_j(seq.E.size(), false), in_s(seq.E.size(), false);
  for (int x : seq.j) in_j[x] = true;
  for (int x : seq.s) in_s[x] = true;

  for (int x = 0; x < seq.E.size(); ++x) {
    if (!in_j[x] && !in_s[x]) return false;                    // union must cover E
    if (in_j[x] && in_s[x] && x != seq.E.unit()) return false; // overlap only at the unit
  }
  return true;
}

}  // namespace mtl
