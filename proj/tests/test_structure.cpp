#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "mtl/enumerate.hpp"
#include "mtl/homs.hpp"
#include "mtl/structure.hpp"
#include "mtl/sums.hpp"

using namespace mtl;

TEST_CASE("idempotents") {
  CHECK(idempotents(fx::T1) == std::vector<int>{0, 2, 3});
  CHECK(idempotents(fx::G3) == std::vector<int>{0, 1, 2});
  CHECK(idempotents(fx::L4) == std::vector<int>{0, 3});
  CHECK(idempotents(fx::ZERO) == std::vector<int>{0});
}

TEST_CASE("local units") {
  CHECK(local_units(fx::T1) == std::vector<int>{3});  // e*x = 0, so e is out
  CHECK(local_units(fx::G3) == std::vector<int>{1, 2});
  CHECK(local_units(fx::L4) == std::vector<int>{3});
  CHECK(local_units(fx::ZERO).empty());
}

TEST_CASE("is_locally_unital") {
  CHECK(!is_locally_unital(fx::T1));
  CHECK(is_locally_unital(fx::G3));
  CHECK(is_locally_unital(fx::L4));
  CHECK(is_locally_unital(fx::ZERO));
}

TEST_CASE("archimedean_status") {
  auto l3 = archimedean_status(fx::L3);
  CHECK(l3.archimedean);
  CHECK(l3.simple);
  CHECK(l3.idempotents_trivial);

  auto g3 = archimedean_status(fx::G3);
  CHECK(!g3.archimedean);
  CHECK(!g3.simple);
  CHECK(!g3.idempotents_trivial);

  auto two = archimedean_status(fx::TWO);
  CHECK(two.archimedean);
  CHECK(two.simple);
  CHECK(two.idempotents_trivial);

  CHECK_THROWS_AS(archimedean_status(fx::ZERO), Error);
}

TEST_CASE("generated_filter: the stabilized power") {
  CHECK(generated_filter(fx::T1, 2).least == 2);  // <e> is the up-set of e
  CHECK(generated_filter(fx::T1, 1).least == 0);  // x*x = 0 pulls in everything
  for (const Chain& c : {fx::T1, fx::G3, fx::L4})
    CHECK(generated_filter(c, c.unit()).least == c.unit());
}

TEST_CASE("all_filters, least descending") {
  auto t1 = all_filters(fx::T1);
  REQUIRE(t1.size() == 3);
  CHECK(t1[0].least == 3);
  CHECK(t1[1].least == 2);
  CHECK(t1[2].least == 0);
  auto l3 = all_filters(fx::L3);
  REQUIRE(l3.size() == 2);
  CHECK(l3[0].least == 2);
  CHECK(l3[1].least == 0);
  auto zero = all_filters(fx::ZERO);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].least == 0);
}

TEST_CASE("is_prime: proper filters only") {
  CHECK(is_prime(fx::T1, Filter{2}));
  CHECK(!is_prime(fx::T1, Filter{0}));
  CHECK(is_prime(fx::L3, Filter{2}));
  CHECK_THROWS_AS(is_prime(fx::T1, Filter{1}), Error);  // 1 is not idempotent in T1
}

TEST_CASE("quotient: T1 by the up-set of e collapses to TWO") {
  Quotient q = quotient(fx::T1, Filter{2});
  CHECK(q.algebra == fx::TWO);
  CHECK(q.projection == std::vector<int>{0, 0, 1, 1});  // classes {0,x} and {e,1}
}

TEST_CASE("quotient: trivial and improper filters") {
  Quotient id = quotient(fx::L4, Filter{3});
  CHECK(id.algebra == fx::L4);
  CHECK(id.projection == std::vector<int>{0, 1, 2, 3});

  Quotient all = quotient(fx::L3, Filter{0});
  CHECK(all.algebra == fx::ZERO);
  CHECK(all.projection == std::vector<int>{0, 0, 0});
}

TEST_CASE("scale: eM re-indexed") {
  CHECK(scale(fx::T1, 2) == fx::TWO);
  CHECK(scale(fx::G3, 1) == fx::TWO);
  for (const Chain& c : {fx::T1, fx::G3, fx::L4, fx::S4}) CHECK(scale(c, c.unit()) == c);
  CHECK_THROWS_AS(scale(fx::T1, 1), Error);  // x is not idempotent
}

TEST_CASE("up_set_chain restricts the product and recomputes the residuum") {
  CHECK(up_set_chain(fx::T1, 2) == fx::TWO);
  CHECK(up_set_chain(fx::S4, 2) == fx::TWO);
  CHECK(up_set_chain(fx::G3, 0) == fx::G3);
  CHECK(up_set_chain(fx::T1, 3) == fx::ZERO);
}

TEST_CASE("filter-idempotent correspondence over the enumerated universe") {
  for (int n = 1; n <= 5; ++n)
    for (const Chain& c : enumerate_chains(n))
      for (int a = 0; a < c.size(); ++a)
        CHECK((generated_filter(c, a).least == a) == (c.prod(a, a) == a));
}

TEST_CASE("every proper filter of a chain is prime") {
  for (int n = 1; n <= 5; ++n)
    for (const Chain& c : enumerate_chains(n))
      for (Filter f : all_filters(c)) CHECK(is_prime(c, f) == (f.least > 0));
}

TEST_CASE("quotient projections are homomorphisms with convex classes") {
  for (int n = 2; n <= 5; ++n)
    for (const Chain& c : enumerate_chains(n))
      for (Filter f : all_filters(c)) {
        Quotient q = quotient(c, f);
        CHECK(check_hom(Hom{c, q.algebra, q.projection, true}).ok());
        // convexity: classes are intervals
        for (int a = 0; a + 1 < c.size(); ++a) CHECK(q.projection[a] <= q.projection[a + 1]);
        // the class of the unit is the filter
        for (int a = 0; a < c.size(); ++a)
          CHECK((q.projection[a] == q.algebra.unit()) == (a >= f.least));
      }
}

TEST_CASE("quotient by a local unit's up-set matches scaling, and empirically for all idempotents") {
  for (int n = 2; n <= 5; ++n)
    for (const Chain& c : enumerate_chains(n)) {
      for (int e : local_units(c))
        CHECK(are_isomorphic(quotient(c, Filter{e}).algebra, scale(c, e)).isomorphic);
      for (int e : idempotents(c))
        CHECK(are_isomorphic(quotient(c, Filter{e}).algebra, scale(c, e)).isomorphic);
    }
}

TEST_CASE("local units sit inside the nonzero idempotents; equality is local unitality") {
  for (int n = 2; n <= 5; ++n)
    for (const Chain& c : enumerate_chains(n)) {
      auto lu = local_units(c);
      auto idem = idempotents(c);
      for (int e : lu) {
        CHECK(e != 0);
        CHECK(c.prod(e, e) == e);
      }
      std::vector<int> nonzero_idem;
      for (int e : idem)
        if (e != 0) nonzero_idem.push_back(e);
      CHECK((lu == nonzero_idem) == is_locally_unital(c));
    }
}
