#include "doctest.h"

#include "citaylor/errors.hpp"
#include "citaylor/quotient.hpp"
#include "support.hpp"

using namespace citaylor;
using namespace testing_support;

TEST_CASE("Groebner basis basics") {
  const PolyRing R = ring_of("x,y,z");
  const Polynomial a = P(R, "x^2*z+x*y^2");
  const GroebnerBasis gb = buchberger({a});
  CHECK(gb.reduced);
  REQUIRE(gb.generators.size() == 1);
  CHECK(normal_form(a, gb).is_zero());
  CHECK(normal_form(P(R, "x"), gb) == P(R, "x"));

  // <x^2 - y, x*y - 1> has a longer reduced grevlex basis; every input
  // element must reduce to zero and the result must be interreduced.
  const PolyRing S = ring_of("x,y");
  const std::vector<Polynomial> gens{P(S, "x^2-y"), P(S, "x*y-1")};
  const GroebnerBasis g2 = buchberger(gens);
  for (const auto& g : gens) CHECK(normal_form(g, g2).is_zero());
  for (std::size_t i = 0; i < g2.generators.size(); ++i) {
    const auto lead = g2.generators[i].leading_term(g2.order);
    CHECK(lead.second == 1);
    for (std::size_t j = 0; j < g2.generators.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : g2.generators[j].terms()) CHECK_FALSE(lead.first.divides(m));
    }
  }
  CHECK_THROWS_AS(buchberger({}), InputError);
  CHECK_THROWS_AS(buchberger({S.zero()}), InputError);
}

TEST_CASE("caps are enforced") {
  const PolyRing S = ring_of("x,y");
  const std::vector<Polynomial> gens{P(S, "x^2-y"), P(S, "x*y-1")};
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::GradedRevLex, {1, 40}), CapExceeded);
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::GradedRevLex, {10000, 2}), CapExceeded);
}

TEST_CASE("normal form kills phi squared of the cubic example") {
  const Instance ex = ex_cubic();
  const ShamashResolution res(ex.system(), 6);
  const GroebnerBasis gb = buchberger(ex.data().sequence());
  for (int n = 1; n < 6; ++n) {
    const auto sq = res.phi(n) * res.phi(n + 1);
    for (std::size_t i = 0; i < sq.rows(); ++i)
      for (std::size_t j = 0; j < sq.cols(); ++j) CHECK(normal_form(sq.at(i, j), gb).is_zero());
  }
}

TEST_CASE("rank mod p") {
  CHECK(rank_mod_p({{1, 2}, {2, 4}}, 7) == 1);
  CHECK(rank_mod_p({{1, 2}, {3, 4}}, 7) == 2);
  CHECK(rank_mod_p({{1, 1}, {1, 6}}, 7) == 2);
  CHECK(rank_mod_p({{3, 3}, {1, 1}}, 7) == 1);
  CHECK(rank_mod_p({}, 7) == 0);
}

TEST_CASE("exactness windows") {
  ExactnessOptions opts;
  opts.max_internal_degree = 10;
  {
    const ShamashResolution res(ex_cubic().system(), 5);
    for (int n = 1; n <= 4; ++n) {
      const Report r = check_exactness(res, n, opts);
      CHECK_MESSAGE(r.passed, (r.failure ? r.failure->detail : std::string()));
    }
  }
  {
    const ShamashResolution res(ex_plane().system(), 5);
    for (int n = 1; n <= 4; ++n) CHECK(check_exactness(res, n, opts).passed);
  }
  const ShamashResolution res(ex_cubic().system(), 3);
  CHECK_THROWS_AS(check_exactness(res, 0, opts), InputError);
  CHECK_THROWS_AS(check_exactness(res, 3, opts), InputError);
  opts.prime = 32004;
  CHECK_THROWS_AS(check_exactness(res, 1, opts), InputError);
}

TEST_CASE("a broken differential is caught by the exactness check") {
  // Dropping f_{1,2} gives homotopies for x^2*y instead of a, so the
  // assembled maps are not a resolution over Q/<a>.
  const Instance ex = ex_plane();
  auto data = ex.data();
  LiftMatrix lift = compute_lift_matrix(data, LiftStrategy::First);
  lift.rows[0][1] = ex.ring.zero();
  const ShamashResolution res(HomotopySystem(std::move(data), std::move(lift)), 4);
  bool any_failure = false;
  for (int n = 1; n <= 3; ++n) any_failure |= !check_exactness(res, n, {6}).passed;
  CHECK(any_failure);
}

TEST_CASE("property: normal form is idempotent and linear") {
  std::mt19937_64 rng(seed() + 5);
  const PolyRing R = ring_of("x,y,z", 32003);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g) {
      Polynomial p = R.zero();
      while (p.is_zero())
        for (int t = 0; t < 3; ++t)
          p.add_term(random_monomial(rng, 3, 2 + static_cast<int>(rng() % 2)), static_cast<long>(rng() % 5));
      gens.push_back(p);
    }
    GroebnerBasis gb;
    try {
      gb = buchberger(gens);
    } catch (const CapExceeded&) {
      continue;
    }
    auto random_poly = [&] {
      Polynomial p = R.zero();
      for (int t = 0; t < 4; ++t)
        p.add_term(random_monomial(rng, 3, static_cast<int>(rng() % 5)), static_cast<long>(rng() % 100));
      return p;
    };
    const Polynomial p = random_poly(), q = random_poly();
    const Polynomial np = normal_form(p, gb);
    CHECK(normal_form(np, gb) == np);
    const mpq_class lambda(static_cast<long>(rng() % 1000));
    CHECK(normal_form(p.scaled(lambda) + q, gb) == np.scaled(lambda) + normal_form(q, gb));
    for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
  }
}

TEST_CASE("property: graded pieces follow the hypersurface Hilbert function") {
  std::mt19937_64 rng(seed() + 6);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = random_instance(rng, 4, 3, 1);
    INFO(inst.describe());
    const auto data = inst.data();
    const int n = static_cast<int>(inst.ring.nvars());
    const int d1 = data.degrees()[0];
    std::vector<Polynomial> seq{data.sequence()[0].with_field(Field(32003))};
    const GroebnerBasis gb = buchberger(seq);
    for (int d = 0; d <= 12; ++d) {
      const auto hf = [&](int e) { return e < 0 ? 0 : binom(n + e - 1, n - 1); };
      CHECK(standard_monomials(gb, inst.ring.nvars(), d).size() == hf(d) - hf(d - d1));
    }
  }
}

TEST_CASE("property: exactness holds for random hypersurface instances") {
  std::mt19937_64 rng(seed() + 7);
  ExactnessOptions opts;
  opts.max_internal_degree = 8;
  for (int trial = 0; trial < 8; ++trial) {
    const Instance inst = random_instance(rng, 3, 3, 1);
    INFO(inst.describe());
    const ShamashResolution res(inst.system(), 4);
    REQUIRE(verify_homotopy_system(res.system()).passed);
    for (int n = 1; n <= 3; ++n) {
      const Report r = check_exactness(res, n, opts);
      CHECK_MESSAGE(r.passed, (r.failure ? r.failure->detail : std::string()));
    }
  }
}
