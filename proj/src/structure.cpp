#include "mtl/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mtl {

std::vector<int> idempotents(const Chain& c) {
  std::vector<int> out;
  for (int a = 0; a < c.size(); ++a)
    if (c.prod(a, a) == a) out.push_back(a);
  return out;
}

static bool is_local_unit(const Chain& c, int e) {
  if (e == 0 || c.prod(e, e) != e) return false;
  for (int x = 0; x <= e; ++x)
    if (c.prod(e, x) != x) return false;
  return true;
}

std::vector<int> local_units(const Chain& c) {
  std::vector<int> out;
  for (int e = 1; e < c.size(); ++e)
    if (is_local_unit(c, e)) out.push_back(e);
  return out;
}

bool is_locally_unital(const Chain& c) {
  for (int e = 1; e < c.size(); ++e)
    if (c.prod(e, e) == e && !is_local_unit(c, e)) return false;
  return true;
}

ArchStatus archimedean_status(const Chain& c) {
  const int n = c.size();
  if (n < 2) throw Error(Reason::trivial_chain, "archimedean status needs at least two elements");

  ArchStatus st;

  // Archimedean, straight from the definition: every y < 1 powers down
  // below every x <= y.
  st.archimedean = true;
  for (int y = 0; y < n - 1 && st.archimedean; ++y)
    for (int x = 0; x <= y && st.archimedean; ++x) {
      int p = y;
      bool reached = p <= x;
      for (int k = 0; k < n && !reached; ++k) {
        p = c.prod(p, y);
        reached = p <= x;
      }
      if (!reached) st.archimedean = false;
    }

  // Simple via a literal filter census: an up-set is a filter iff it is
  // closed under the product.
  st.simple = true;
  for (int least = 1; least < n - 1 && st.simple; ++least) {
    bool closed = true;
    for (int a = least; a < n && closed; ++a)
      for (int b = least; b < n && closed; ++b)
        if (c.prod(a, b) < least) closed = false;
    if (closed) st.simple = false;  // proper nontrivial filter found
  }

  st.idempotents_trivial = true;
  for (int a = 1; a < n - 1; ++a)
    if (c.prod(a, a) == a) st.idempotents_trivial = false;

  return st;
}

Filter generated_filter(const Chain& c, int x) {
  if (x < 0 || x >= c.size()) throw Error(Reason::out_of_range, "element out of range");
  int p = x;
  while (c.prod(p, x) != p) p = c.prod(p, x);
  return Filter{p};
}

std::vector<Filter> all_filters(const Chain& c) {
  std::vector<int> idem = idempotents(c);
  std::vector<Filter> out;
  for (auto it = idem.rbegin(); it != idem.rend(); ++it) out.push_back(Filter{*it});
  return out;
}

static void require_filter(const Chain& c, Filter f) {
  if (f.least < 0 || f.least >= c.size())
    throw Error(Reason::not_a_filter, "filter least element out of range", f.least);
  if (c.prod(f.least, f.least) != f.least)
    throw Error(Reason::not_a_filter,
                "element " + std::to_string(f.least) + " is not idempotent, its up-set is not a filter",
                f.least);
}

bool is_prime(const Chain& c, Filter f) {
  require_filter(c, f);
  if (f.least == 0) return false;  // contains the bottom
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y) {
      int join = std::max(x, y);
      if (join >= f.least && x < f.least && y < f.least) return false;
    }
  return true;
}

Quotient quotient(const Chain& c, Filter f) {
  require_filter(c, f);
  const int n = c.size();
  auto related = [&](int a, int b) {
    return residuum(c, a, b) >= f.least && residuum(c, b, a) >= f.least;
  };

  std::vector<int> proj(n, 0);
  for (int a = 1; a < n; ++a) proj[a] = proj[a - 1] + (related(a - 1, a) ? 0 : 1);

  // Grouping consecutive elements is valid because the classes are convex
  // intervals; verify rather than assume.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((proj[a] == proj[b]) != related(a, b))
        throw std::logic_error("congruence classes are not convex intervals");

  const int m = proj[n - 1] + 1;
  std::vector<int> least_of(m, -1);
  for (int a = n - 1; a >= 0; --a) least_of[proj[a]] = a;

  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i * m + j] = proj[c.prod(least_of[i], least_of[j])];

  return Quotient{make_chain(m, table), std::move(proj)};
}

static void require_idempotent(const Chain& c, int e) {
  if (e < 0 || e >= c.size()) throw Error(Reason::out_of_range, "element out of range", e);
  if (c.prod(e, e) != e)
    throw Error(Reason::not_idempotent, "element " + std::to_string(e) + " is not idempotent", e);
}

Chain scale(const Chain& c, int e) {
  require_idempotent(c, e);
  const int n = c.size();
  std::vector<int> carrier;
  for (int x = 0; x < n; ++x) {
    int v = c.prod(e, x);
    if (carrier.empty() || carrier.back() != v) carrier.push_back(v);  // row e is monotone
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < static_cast<int>(carrier.size()); ++i) pos[carrier[i]] = i;

  const int m = static_cast<int>(carrier.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = pos[c.prod(carrier[i], carrier[j])];
  return make_chain(m, table);
}

Chain up_set_chain(const Chain& c, int e) {
  require_idempotent(c, e);
  const int m = c.size() - e;
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = c.prod(e + i, e + j) - e;
  return make_chain(m, table);
}

}  // namespace mtl
