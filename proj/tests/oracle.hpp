// Test-only oracles: independent brute-force implementations used to derive
// expected values.  They share no code with the library and stay deliberately
// naive.
#pragma once

#include <algorithm>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

// Direct restatement of the chain axioms, quantifier by quantifier.
inline bool valid_chain(int n, const Table& t) {
  if (n < 1 || static_cast<int>(t.size()) != n) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int v : row)
      if (v < 0 || v >= n) return false;
  }
  for (int a = 0; a < n; ++a)
    if (t[a][n - 1] != a || t[n - 1][a] != a) return false;
  for (int a = 0; a < n; ++a)
    if (t[0][a] != 0 || t[a][0] != 0) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[a][b] != t[b][a]) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2)
      for (int b = 0; b < n; ++b)
        if (a <= a2 && t[a][b] > t[a2][b]) return false;
  return true;
}

// max { z : x*z <= y }, scanning upward and collecting.
inline int residuum(const Table& t, int x, int y) {
  int best = 0;
  for (int z = 0; z < static_cast<int>(t.size()); ++z)
    if (t[x][z] <= y) best = std::max(best, z);
  return best;
}

// Generate-all-then-filter enumeration: every assignment of the inner
// (n-2) x (n-2) block, each entry ranging over the whole carrier, filtered
// through the axiom oracle.  Feasible for n <= 5.
inline std::vector<Table> enumerate(int n) {
  std::vector<Table> out;
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    t[a][n - 1] = t[n - 1][a] = a;
    t[a][0] = t[0][a] = 0;
  }
  const int inner = n > 2 ? n - 2 : 0;
  const int cells = inner * inner;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int i = 0; i < cells; ++i) {
      t[1 + i / inner][1 + i % inner] = static_cast<int>(rest % n);
      rest /= n;
    }
    if (valid_chain(n, t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The bounded Lukasiewicz chain on {0, 1/(n-1), ..., 1}.
inline Table lukasiewicz(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = std::max(0, a + b - (n - 1));
  return t;
}

// Two-term ordinal sum straight from the case tables: disjoint union of the
// lower chain minus its unit and the upper chain, lower element wins across.
inline Table osum2(const Table& lower, const Table& upper) {
  const int nl = static_cast<int>(lower.size());
  const int nu = static_cast<int>(upper.size());
  const int n = nl - 1 + nu;
  Table t(n, std::vector<int>(n));
  auto in_lower = [&](int x) { return x < nl - 1; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (in_lower(x) && in_lower(y)) {
        t[x][y] = lower[x][y];
      } else if (!in_lower(x) && !in_lower(y)) {
        int v = upper[x - (nl - 1)][y - (nl - 1)];
        t[x][y] = v + nl - 1;
      } else if (in_lower(x)) {
        t[x][y] = x;  // x sits below everything in the upper copy
      } else {
        t[x][y] = y;
      }
    }
  return t;
}

}  // namespace oracle
