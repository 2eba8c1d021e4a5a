#include "mtl/chain.hpp"

#include <sstream>

namespace mtl {

const char* reason_code(Reason r) {
  switch (r) {
    case Reason::out_of_range: return "OUT_OF_RANGE";
    case Reason::axiom_violation: return "AXIOM_VIOLATION";
    case Reason::trivial_chain: return "TRIVIAL_CHAIN";
    case Reason::not_idempotent: return "NOT_IDEMPOTENT";
    case Reason::not_locally_unital: return "NOT_LOCALLY_UNITAL";
    case Reason::not_a_filter: return "NOT_A_FILTER";
    case Reason::not_exact: return "NOT_EXACT";
    case Reason::malformed_spec: return "MALFORMED_SPEC";
    case Reason::conditions_failed: return "CONDITIONS_FAILED";
    case Reason::assembled_not_mtl: return "ASSEMBLED_NOT_MTL";
    case Reason::empty_family: return "EMPTY_FAMILY";
    case Reason::component_too_small: return "COMPONENT_TOO_SMALL";
    case Reason::unknown_claim: return "UNKNOWN_CLAIM";
  }
  return "UNKNOWN";
}

namespace {

std::string witness_str(const Check& c) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int w : c.witness) {
    if (w < 0) break;
    if (!first) os << ",";
    os << w;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string describe(const AxiomReport& r) {
  if (r.valid()) return "valid MTL-chain";
  std::ostringstream os;
  os << "not an MTL-chain:";
  if (!r.unit.ok) os << " unit fails at " << witness_str(r.unit);
  if (!r.bottom.ok) os << " bottom fails at " << witness_str(r.bottom);
  if (!r.commutative.ok) os << " commutativity fails at " << witness_str(r.commutative);
  if (!r.associative.ok) os << " associativity fails at " << witness_str(r.associative);
  if (!r.monotone.ok) os << " monotonicity fails at rows/col " << witness_str(r.monotone);
  return os.str();
}

AxiomViolation::AxiomViolation(AxiomReport report, Reason reason)
    : Error(reason, describe(report)), report_(std::move(report)) {}

std::vector<std::vector<int>> Chain::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int a = 0; a < n_; ++a)
    out[a].assign(table_.begin() + a * n_, table_.begin() + (a + 1) * n_);
  return out;
}

static std::vector<int> flatten(int n, const std::vector<std::vector<int>>& table) {
  if (n < 1) throw Error(Reason::out_of_range, "chain size must be at least 1");
  if (static_cast<int>(table.size()) != n)
    throw Error(Reason::out_of_range, "product table must have n rows");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(Reason::out_of_range, "product table rows must have n entries");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

AxiomReport check_axioms(int n, const std::vector<int>& t) {
  if (n < 1) throw Error(Reason::out_of_range, "chain size must be at least 1");
  if (static_cast<int>(t.size()) != n * n)
    throw Error(Reason::out_of_range, "product table must be n x n");
  for (int i = 0; i < n * n; ++i)
    if (t[i] < 0 || t[i] >= n)
      throw Error(Reason::out_of_range,
                  "table entry out of range at (" + std::to_string(i / n) + "," +
                      std::to_string(i % n) + ")",
                  i);

  AxiomReport r;
  r.size = n;
  const int top = n - 1;
  auto at = [&](int a, int b) { return t[a * n + b]; };

  for (int a = 0; a < n && r.unit.ok; ++a) {
    if (at(a, top) != a)
      r.unit = {false, {a, top, -1}};
    else if (at(top, a) != a)
      r.unit = {false, {top, a, -1}};
  }
  for (int a = 0; a < n && r.bottom.ok; ++a) {
    if (at(0, a) != 0)
      r.bottom = {false, {0, a, -1}};
    else if (at(a, 0) != 0)
      r.bottom = {false, {a, 0, -1}};
  }
  for (int a = 0; a < n && r.commutative.ok; ++a)
    for (int b = a + 1; b < n && r.commutative.ok; ++b)
      if (at(a, b) != at(b, a)) r.commutative = {false, {a, b, -1}};
  for (int a = 0; a < n && r.associative.ok; ++a)
    for (int b = 0; b < n && r.associative.ok; ++b)
      for (int c = 0; c < n && r.associative.ok; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) r.associative = {false, {a, b, c}};
  for (int a = 0; a + 1 < n && r.monotone.ok; ++a)
    for (int b = 0; b < n && r.monotone.ok; ++b)
      if (at(a, b) > at(a + 1, b)) r.monotone = {false, {a, a + 1, b}};

  return r;
}

AxiomReport check_axioms(int n, const std::vector<std::vector<int>>& table) {
  return check_axioms(n, flatten(n, table));
}

Chain make_chain(int n, const std::vector<int>& table) {
  AxiomReport r = check_axioms(n, table);
  if (!r.valid()) throw AxiomViolation(std::move(r));
  return Chain(n, table);
}

Chain make_chain(int n, const std::vector<std::vector<int>>& table) {
  return make_chain(n, flatten(n, table));
}

int residuum(const Chain& c, int x, int y) {
  const int n = c.size();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw Error(Reason::out_of_range, "residuum arguments out of range");
  for (int z = n - 1; z > 0; --z)
    if (c.prod(x, z) <= y) return z;
  return 0;
}

IsoResult are_isomorphic(const Chain& a, const Chain& b) {
  if (a.size() != b.size() || a.table() != b.table()) return {};
  std::vector<int> id(a.size());
  for (int i = 0; i < a.size(); ++i) id[i] = i;
  return {true, std::move(id)};
}

}  // namespace mtl
