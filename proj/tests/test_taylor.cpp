#include "doctest.h"

#include "citaylor/errors.hpp"
#include "support.hpp"

using namespace citaylor;
using namespace testing_support;

TEST_CASE("Taylor complex of <xy,xz,yz>") {
  const PolyRing R = ring_of("x,y,z");
  const MonomialIdeal I = parse_monomial_ideal({"x*y", "x*z", "y*z"}, R);
  const TaylorComplex T = build_taylor_complex(I);
  std::string why;
  CHECK_MESSAGE(matches(T.tau(1), R, {{"x*y", "x*z", "y*z"}}, &why), why);
  CHECK_MESSAGE(matches(T.tau(2), R, {{"z", "z", "0"}, {"-y", "0", "y"}, {"0", "-x", "-x"}}, &why),
                why);
  CHECK_MESSAGE(matches(T.tau(3), R, {{"1"}, {"-1"}, {"1"}}, &why), why);
  CHECK(subset_names(T.tau(2).col_labels(), 3) == std::vector<std::string>{"12", "13", "23"});
  CHECK(subset_names(T.tau(2).row_labels(), 3) == std::vector<std::string>{"1", "2", "3"});
  CHECK(twists(T.modules[2]) == std::vector<int>{3, 3, 3});
  CHECK(twists(T.modules[3]) == std::vector<int>{3});
  CHECK(verify_taylor(I).passed);
}

TEST_CASE("subset labels") {
  const PolyRing R = ring_of("x,y,z");
  const MonomialIdeal I = parse_monomial_ideal({"x^2", "y^2", "z^2"}, R);
  const SubsetLabel empty = I.label({});
  CHECK(empty.lcm.is_one());
  CHECK(empty.degree == 0);
  const SubsetLabel s = I.label({1, 3});
  CHECK(s.lcm == parse_monomial("x^2*z^2", R));
  CHECK(s.degree == 4);
  CHECK(subset_name({}, 3) == "∅");
  CHECK(subset_name({1, 2, 3}, 3) == "123");
  CHECK(subset_name({1, 10}, 10) == "1,10");
  CHECK(taylor_basis(I, 0).size() == 1);
  CHECK_THROWS_AS(taylor_basis(I, 4), InputError);
}

TEST_CASE("single generator and repeated generators") {
  const PolyRing R = ring_of("x,y");
  const MonomialIdeal one = parse_monomial_ideal({"x*y"}, R);
  const TaylorComplex T = build_taylor_complex(one);
  std::string why;
  CHECK_MESSAGE(matches(T.tau(1), R, {{"x*y"}}, &why), why);
  const Report r = verify_taylor(one);
  CHECK(r.passed);
  CHECK(r.checks == 0);
  CHECK_FALSE(r.notes.empty());

  const MonomialIdeal dup = parse_monomial_ideal({"x", "x"}, R);
  CHECK_FALSE(dup.warnings().empty());
  CHECK(verify_taylor(dup).passed);

  CHECK_THROWS_AS(parse_monomial_ideal({"x+y"}, R), InputError);
  CHECK_THROWS_AS(parse_monomial_ideal({}, R), InputError);
  CHECK_THROWS_AS(parse_monomial_ideal({"0"}, R), InputError);
}

TEST_CASE("property: Taylor differentials agree with the oracle and square to zero") {
  std::mt19937_64 rng(seed());
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = random_instance(rng, 4, 6, 1);
    const MonomialIdeal I = parse_monomial_ideal(inst.ideal, inst.ring);
    const std::size_t n = inst.ring.nvars(), r = I.rank();
    INFO(inst.describe());
    const TaylorComplex T = build_taylor_complex(I);
    for (std::size_t k = 0; k <= r; ++k) CHECK(T.modules[k].size() == binom(static_cast<int>(r), static_cast<int>(k)));
    for (int k = 1; k <= static_cast<int>(r); ++k) {
      const auto& tau = T.tau(k);
      CHECK(same(tau, oracle_tau(I.generators(), n, k)));
      for (std::size_t i = 0; i < tau.rows(); ++i)
        for (std::size_t j = 0; j < tau.cols(); ++j)
          if (!tau.at(i, j).is_zero()) {
            CHECK(tau.row_labels()[i].subset.lcm.divides(tau.col_labels()[j].subset.lcm));
            CHECK(tau.at(i, j).total_degree() ==
                  tau.col_labels()[j].twist - tau.row_labels()[i].twist);
          }
      if (k < static_cast<int>(r)) {
        CHECK((T.tau(k) * T.tau(k + 1)).is_zero());
        const auto square = naive_multiply(oracle_tau(I.generators(), n, k),
                                           oracle_tau(I.generators(), n, k + 1), n,
                                           binom(static_cast<int>(r), k));
        for (const auto& row : square)
          for (const auto& e : row) CHECK(e.is_zero());
      }
    }
    CHECK(verify_taylor(I).passed);
  }
}
