// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything runs at desk scale against the enumerated universe of
// chains with at most six elements.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "mtl/enumerate.hpp"
#include "mtl/gcp.hpp"
#include "mtl/homs.hpp"
#include "mtl/json_io.hpp"
#include "mtl/structure.hpp"
#include "mtl/sums.hpp"
#include "oracle.hpp"

using namespace mtl;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::ostream&)> check;
};

bool expect(std::ostream& log, bool cond, const std::string& what) {
  if (!cond) log << "    failed: " << what << "\n";
  return cond;
}

// 1. The Table-1 fixture suite, exact equality throughout.
bool c1_table1(std::ostream& log) {
  bool ok = true;
  ok &= expect(log, idempotents(fx::T1) == std::vector<int>{0, 2, 3}, "idempotents {0,e,1}");
  ok &= expect(log, local_units(fx::T1) == std::vector<int>{3}, "local units {1}");
  ok &= expect(log, !is_locally_unital(fx::T1), "the local-unit quasi-identity fails");

  Quotient q = quotient(fx::T1, Filter{2});
  ok &= expect(log, q.algebra == fx::TWO, "quotient by the up-set of e is TWO");
  ok &= expect(log, q.projection == std::vector<int>{0, 0, 1, 1}, "classes {0,x} and {e,1}");

  SplitSequence seq{up_set_chain(fx::T1, 2), fx::T1, fx::TWO, {2, 3}, q.projection, {0, 3}};
  ok &= expect(log, check_split_exact(seq).ok(), "the sequence with s(0)=0 is split exact");
  ok &= expect(log, !ordinal_extension_test(seq), "the ordinal-extension test returns false");

  bool threw = false;
  try {
    decompose(fx::T1);
  } catch (const Error& e) {
    threw = e.reason() == Reason::not_locally_unital && e.witness() == 2;
  }
  ok &= expect(log, threw, "decompose raises NOT_LOCALLY_UNITAL with witness e");
  return ok;
}

// 2. Enumeration census against the independent naive oracle.
bool c2_census(std::ostream& log) {
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    auto got = enumerate_chains(n);
    auto want = oracle::enumerate(n);
    bool same = got.size() == want.size();
    for (size_t i = 0; same && i < got.size(); ++i) same = got[i].rows() == want[i];
    std::ostringstream what;
    what << "n=" << n << " matches the oracle (" << got.size() << " vs " << want.size() << ")";
    ok &= expect(log, same, what.str());
  }
  auto four = enumerate_chains(4);
  int arch = 0, lu = 0;
  for (const Chain& c : four) {
    arch += archimedean_status(c).archimedean;
    lu += is_locally_unital(c);
  }
  ok &= expect(log, four.size() == 6 && arch == 2 && lu == 5, "n=4: 6 chains, 2 archimedean, 5 locally unital");

  // Sizes 5 and 6 complete; spot-check 100 random tables per size against
  // the axiom oracle: accepted tables re-validate, random candidates agree
  // with membership in the enumerated set.
  std::mt19937 rng(20240817);
  for (int n = 5; n <= 6; ++n) {
    auto start = std::chrono::steady_clock::now();
    auto chains = enumerate_chains(n, 1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::set<std::vector<int>> members;
    for (const Chain& c : chains) members.insert(c.table());

    bool spot = true;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(chains.size()) - 1);
    std::uniform_int_distribution<int> entry(0, n - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const Chain& c = chains[pick(rng)];
      spot = spot && oracle::valid_chain(n, c.rows());
    }
    for (int trial = 0; trial < 50; ++trial) {
      auto rows = chains[pick(rng)].rows();
      int a = 1 + entry(rng) % (n - 2), b = 1 + entry(rng) % (n - 2);
      rows[a][b] = rows[b][a] = entry(rng);
      std::vector<int> flat;
      for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
      spot = spot && (oracle::valid_chain(n, rows) == (members.count(flat) > 0));
    }
    std::ostringstream what;
    what << "n=" << n << " spot checks (" << chains.size() << " chains)";
    ok &= expect(log, spot, what.str());
    if (n == 6) {
      std::ostringstream t;
      t << "n=6 single-worker enumeration under 60 s (took " << secs << " s)";
      ok &= expect(log, secs < 60.0, t.str());
    }
  }
  return ok;
}

bool claim_passes(std::ostream& log, const std::string& id, int max_size) {
  ClaimReport rep = verify_claim(id, max_size);
  std::ostringstream what;
  what << id << " at size " << max_size << ": " << rep.instances << " instances, "
       << rep.counterexamples.size() << " counterexamples";
  bool ok = expect(log, rep.pass(), what.str());
  if (!rep.pass()) log << "    first counterexample: " << rep.counterexamples[0].dump() << "\n";
  return ok;
}

// 3-7, 9: the structural claims, zero counterexamples each.
bool c3_arch(std::ostream& log) { return claim_passes(log, "prop-arch-equiv", 6); }
bool c4_filter(std::ostream& log) { return claim_passes(log, "filter-idempotent", 6); }
bool c5_decompose(std::ostream& log) { return claim_passes(log, "lemma-decompose", 6); }

bool c6_lu_split(std::ostream& log) {
  ClaimReport rep = verify_claim("remark-lu-split", 6);
  log << "    informational: quotient/scale agreement over all idempotents: "
      << rep.info["quotient_scale_holds_for_all_idempotents"].dump() << " ("
      << rep.info["quotient_scale_idempotents_checked"].dump() << " checked)\n";
  return expect(log, rep.pass(), "every local unit splits the chain");
}

bool c7_gcp(std::ostream& log) {
  ClaimReport rep = verify_claim("gcp-extension", 6);
  bool ok = true;
  // Break the bundled assertions apart so the verdict names the clause.
  long long split_failures = 0;
  bool other_failures = false;
  for (const auto& cex : rep.counterexamples) {
    if (cex["issue"] == "assembled sequence is not split exact")
      ++split_failures;
    else
      other_failures = true;
  }
  ok &= expect(log, !other_failures, "round trip, strict conditions and quotient agree everywhere");
  std::ostringstream what;
  what << "every assembled sequence is split exact (" << split_failures << " of "
       << rep.instances << " extensions have a minimum-section that is not a morphism)";
  ok &= expect(log, split_failures == 0, what.str());
  if (split_failures > 0)
    log << "    first counterexample: " << rep.counterexamples[0]["chain"].dump()
        << " filter_least=" << rep.counterexamples[0]["filter_least"]
        << " (section fails only residuum preservation; no morphism section exists)\n";
  ok &= claim_passes(log, "gcp-roundtrip", 6);
  return ok;
}

// 8. The corollary probe: the printed translation must violate the strict
// zero-annihilation condition, with the stated minimal witness, while all-2
// families pass and the report keeps the strict and weak readings apart.
bool c8_corollary(std::ostream& log) {
  ClaimReport rep = verify_claim("coro-osum-gcp", 6);
  bool ok = true;
  ok &= expect(log, !rep.counterexamples.empty(), "violation list is non-empty");
  ok &= expect(log, rep.info["all_two_chain_families_pass"] == true, "every all-2-chain family passes");

  bool distinguished = !rep.counterexamples.empty();
  for (const auto& cex : rep.counterexamples)
    distinguished = distinguished && cex.contains("strict_zero") && cex.contains("weak_zero");
  ok &= expect(log, distinguished, "strict and weak readings reported side by side");

  bool strict_fails_everywhere = true;
  for (const auto& cex : rep.counterexamples)
    strict_fails_everywhere = strict_fails_everywhere && cex["strict_zero"]["ok"] == false;
  ok &= expect(log, strict_fails_everywhere, "every violation fails strict zero annihilation");

  nlohmann::json expected_min = nlohmann::json::array(
      {chain_to_json(fx::L3), chain_to_json(fx::L3)});
  const auto& got_min = rep.counterexamples[0]["family"];
  bool min_is_l3l3 = got_min == expected_min;
  ok &= expect(log, min_is_l3l3, "minimal witness is the family [L3, L3]");
  if (!min_is_l3l3) log << "    actual minimal witness: " << got_min.dump() << "\n";
  return ok;
}

bool c9_lemma22(std::ostream& log) { return claim_passes(log, "lemma22-roundtrip", 6); }

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"Table-1 fixture suite", c1_table1},
      {"enumeration census and oracle agreement", c2_census},
      {"archimedean = simple = trivial idempotents", c3_arch},
      {"generated filter is an up-set iff idempotent", c4_filter},
      {"locally unital chains decompose and round-trip", c5_decompose},
      {"local units split the chain as an ordinal sum", c6_lu_split},
      {"extensions extract, validate and reassemble", c7_gcp},
      {"ordinal-sum translation: strict condition probe", c8_corollary},
      {"ordinal-extension test classifies two-term sums", c9_lemma22},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    bool ok = false;
    try {
      ok = criteria[i].check(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << "/9: "
              << criteria[i].name << "\n"
              << log.str();
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
