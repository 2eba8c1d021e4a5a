#include "mtl/gcp.hpp"

#include <algorithm>
#include <string>

namespace mtl {

namespace {

// Shape problems make the spec unreadable and throw; value-level problems
// become report entries.
void require_shape(const GcpSpec& s) {
  const int m = s.index_algebra.size();
  if (static_cast<int>(s.blocks.size()) != m)
    throw Error(Reason::malformed_spec, "block count must match the index algebra size");
  for (int b : s.blocks)
    if (b < 1) throw Error(Reason::malformed_spec, "every block must be a nonempty chain");
  if (static_cast<int>(s.mu.size()) != m)
    throw Error(Reason::malformed_spec, "mu must have one row of tables per index");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(s.mu[i].size()) != m)
      throw Error(Reason::malformed_spec, "mu must cover every ordered index pair");
    for (int j = 0; j < m; ++j) {
      const MuTable& t = s.mu[i][j];
      if (static_cast<int>(t.size()) != s.blocks[i])
        throw Error(Reason::malformed_spec, "mu table has the wrong number of rows");
      for (const auto& row : t)
        if (static_cast<int>(row.size()) != s.blocks[j])
          throw Error(Reason::malformed_spec, "mu table has the wrong number of columns");
    }
  }
}

std::vector<int> block_offsets(const GcpSpec& s) {
  std::vector<int> off(s.blocks.size() + 1, 0);
  for (size_t i = 0; i < s.blocks.size(); ++i) off[i + 1] = off[i] + s.blocks[i];
  return off;
}

std::vector<int> assembled_table(const GcpSpec& s) {
  const int m = s.index_algebra.size();
  std::vector<int> off = block_offsets(s);
  const int n = off[m];
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int ij = s.index_algebra.prod(i, j);
      for (int a = 0; a < s.blocks[i]; ++a)
        for (int b = 0; b < s.blocks[j]; ++b)
          table[(off[i] + a) * n + (off[j] + b)] = off[ij] + s.mu[i][j][a][b];
    }
  return table;
}

}  // namespace

ConditionReport validate_gcp(const GcpSpec& spec) {
  require_shape(spec);
  ConditionReport r;
  const Chain& A = spec.index_algebra;
  const int m = A.size();
  const int top = m - 1;

  // Wellformedness: entries land in the right block, F sits at the top index
  // and the top block carries F's own product.
  bool ranges_ok = true;
  for (int i = 0; i < m && r.wellformed.ok; ++i)
    for (int j = 0; j < m && r.wellformed.ok; ++j) {
      const int ij = A.prod(i, j);
      for (int a = 0; a < spec.blocks[i] && r.wellformed.ok; ++a)
        for (int b = 0; b < spec.blocks[j] && r.wellformed.ok; ++b) {
          int v = spec.mu[i][j][a][b];
          if (v < 0 || v >= spec.blocks[ij]) {
            r.wellformed = {false, {i, j, a, b}, "mu value escapes the target block"};
            ranges_ok = false;
          }
        }
    }
  if (r.wellformed.ok && spec.blocks[top] != spec.filter.size())
    r.wellformed = {false, {top}, "top block size differs from the filter"};
  if (r.wellformed.ok) {
    for (int a = 0; a < spec.filter.size() && r.wellformed.ok; ++a)
      for (int b = 0; b < spec.filter.size() && r.wellformed.ok; ++b)
        if (spec.mu[top][top][a][b] != spec.filter.prod(a, b))
          r.wellformed = {false, {a, b}, "top block product differs from the filter"};
  }

  if (!ranges_ok) {
    const Condition skipped{false, {}, "not evaluated: mu values escape their blocks"};
    r.monotone = r.zero = r.zero_weak = r.associative = r.commutative = r.global_unit = skipped;
    return r;
  }

  // (i) monotone in each coordinate.
  for (int i = 0; i < m && r.monotone.ok; ++i)
    for (int j = 0; j < m && r.monotone.ok; ++j)
      for (int a = 0; a < spec.blocks[i] && r.monotone.ok; ++a)
        for (int b = 0; b < spec.blocks[j] && r.monotone.ok; ++b) {
          if (a + 1 < spec.blocks[i] && spec.mu[i][j][a][b] > spec.mu[i][j][a + 1][b])
            r.monotone = {false, {i, j, a, b}, "decreasing in the first coordinate"};
          else if (b + 1 < spec.blocks[j] && spec.mu[i][j][a][b] > spec.mu[i][j][a][b + 1])
            r.monotone = {false, {i, j, a, b}, "decreasing in the second coordinate"};
        }

  // (ii) zero annihilation, both identities, quantified over every pair as
  // printed.
  for (int i = 0; i < m && r.zero.ok; ++i)
    for (int j = 0; j < m && r.zero.ok; ++j) {
      for (int b = 0; b < spec.blocks[j] && r.zero.ok; ++b)
        if (spec.mu[i][j][0][b] != 0)
          r.zero = {false, {i, j, 0, b}, "mu(0_i, k_j) is not the target bottom"};
      for (int a = 0; a < spec.blocks[i] && r.zero.ok; ++a)
        if (spec.mu[i][j][a][0] != 0)
          r.zero = {false, {i, j, a, 0}, "mu(k_i, 0_j) is not the target bottom"};
    }

  // Weak reading: only the instance the quotient-by-F argument needs, namely
  // the bottom of F annihilating into each block.
  for (int i = 0; i < m && r.zero_weak.ok; ++i)
    for (int b = 0; b < spec.blocks[i] && r.zero_weak.ok; ++b)
      if (spec.mu[top][i][0][b] != 0)
        r.zero_weak = {false, {top, i, 0, b}, "mu(0_F, k_i) is not the block bottom"};

  // (iii) jointly associative.
  for (int i = 0; i < m && r.associative.ok; ++i)
    for (int j = 0; j < m && r.associative.ok; ++j)
      for (int k = 0; k < m && r.associative.ok; ++k) {
        const int ij = A.prod(i, j);
        const int jk = A.prod(j, k);
        for (int a = 0; a < spec.blocks[i] && r.associative.ok; ++a)
          for (int b = 0; b < spec.blocks[j] && r.associative.ok; ++b)
            for (int c = 0; c < spec.blocks[k] && r.associative.ok; ++c)
              if (spec.mu[ij][k][spec.mu[i][j][a][b]][c] !=
                  spec.mu[i][jk][a][spec.mu[j][k][b][c]])
                r.associative = {false, {i, j, k, a, b, c}, "association order changes the result"};
      }

  // (iv) jointly commutative.
  for (int i = 0; i < m && r.commutative.ok; ++i)
    for (int j = 0; j < m && r.commutative.ok; ++j)
      for (int a = 0; a < spec.blocks[i] && r.commutative.ok; ++a)
        for (int b = 0; b < spec.blocks[j] && r.commutative.ok; ++b)
          if (spec.mu[i][j][a][b] != spec.mu[j][i][b][a])
            r.commutative = {false, {i, j, a, b}, "mu_ij and mu_ji disagree"};

  // (v) global unit.
  const int one_f = spec.blocks[top] - 1;
  for (int i = 0; i < m && r.global_unit.ok; ++i)
    for (int b = 0; b < spec.blocks[i] && r.global_unit.ok; ++b)
      if (spec.mu[top][i][one_f][b] != b)
        r.global_unit = {false, {i, b}, "1_F does not act as the identity"};

  if (r.conditions_ok()) {
    std::vector<int> off = block_offsets(spec);
    r.assembled = check_axioms(off.back(), assembled_table(spec));
  }
  return r;
}

Assembled assemble(const GcpSpec& spec) {
  ConditionReport rep = validate_gcp(spec);
  if (!rep.conditions_ok()) {
    std::string which = !rep.wellformed.ok     ? "blocks are malformed"
                        : !rep.monotone.ok     ? "monotonicity (i) fails"
                        : !rep.zero.ok         ? "zero annihilation (ii) fails"
                        : !rep.associative.ok  ? "joint associativity (iii) fails"
                        : !rep.commutative.ok  ? "joint commutativity (iv) fails"
                                               : "global unit (v) fails";
    throw Error(Reason::conditions_failed, which);
  }
  if (!rep.assembled->valid()) throw AxiomViolation(*rep.assembled, Reason::assembled_not_mtl);

  std::vector<int> off = block_offsets(spec);
  Assembled out{make_chain(off.back(), assembled_table(spec)), {}};
  for (int i = 0; i < spec.index_algebra.size(); ++i)
    for (int a = 0; a < spec.blocks[i]; ++a) out.block_of.emplace_back(i, a);
  return out;
}

GcpSpec gcp_from_extension(const Chain& e, Filter f) {
  Quotient q = quotient(e, f);  // validates f
  const int m = q.algebra.size();

  std::vector<std::vector<int>> members(m);
  for (int x = 0; x < e.size(); ++x) members[q.projection[x]].push_back(x);

  GcpSpec spec{q.algebra, up_set_chain(e, f.least), {}, {}};
  spec.blocks.resize(m);
  for (int i = 0; i < m; ++i) spec.blocks[i] = static_cast<int>(members[i].size());

  spec.mu.assign(m, std::vector<MuTable>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int ij = q.algebra.prod(i, j);
      MuTable t(spec.blocks[i], std::vector<int>(spec.blocks[j]));
      for (int a = 0; a < spec.blocks[i]; ++a)
        for (int b = 0; b < spec.blocks[j]; ++b)
          t[a][b] = e.prod(members[i][a], members[j][b]) - members[ij][0];
      spec.mu[i][j] = std::move(t);
    }
  return spec;
}

GcpSpec gcp_from_ordinal_sum(const std::vector<Chain>& family) {
  if (family.empty()) throw Error(Reason::empty_family, "the family must be nonempty");
  for (const Chain& c : family)
    if (c.size() < 2)
      throw Error(Reason::component_too_small, "every component needs at least two elements");

  const int m = static_cast<int>(family.size());
  const int top = m - 1;

  // The index algebra is the minimum-product chain on the family order.
  std::vector<int> min_table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) min_table[i * m + j] = std::min(i, j);

  GcpSpec spec{make_chain(m, min_table), family.back(), {}, {}};
  spec.blocks.resize(m);
  for (int i = 0; i < m; ++i) spec.blocks[i] = family[i].size() - (i == top ? 0 : 1);

  spec.mu.assign(m, std::vector<MuTable>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      MuTable t(spec.blocks[i], std::vector<int>(spec.blocks[j]));
      for (int a = 0; a < spec.blocks[i]; ++a)
        for (int b = 0; b < spec.blocks[j]; ++b) {
          if (i == j)
            t[a][b] = family[i].prod(a, b);  // closed: a, b below the dropped unit
          else
            t[a][b] = i < j ? a : b;
        }
      spec.mu[i][j] = std::move(t);
    }
  return spec;
}

}  // namespace mtl
