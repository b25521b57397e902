#include <catch2/catch_amalgamated.hpp>

#include "jackmaps/jack.hpp"

using namespace jackmaps;

namespace {

// <p_rho, p_sigma> = delta z_rho alpha^{l(rho)}; inner product of two
// expansions as a polynomial in alpha.
UniPoly jack_inner(const std::map<Partition, UniPoly>& f, const std::map<Partition, UniPoly>& g) {
  UniPoly acc;
  for (const auto& [rho, cf] : f) {
    auto it = g.find(rho);
    if (it == g.end()) continue;
    acc += cf * it->second * UniPoly::monomial(rho.length(), Rational(rho.z()));
  }
  return acc;
}

}  // namespace

TEST_CASE("power sum expansions of small jack polynomials") {
  auto j2 = jack_powersum(Partition({2}));
  CHECK(j2.size() == 2);
  CHECK(j2.at(Partition({2})) == UniPoly::monomial(1));     // alpha p_2
  CHECK(j2.at(Partition({1, 1})) == UniPoly(Rational(1)));  // p_1^2

  auto j11 = jack_powersum(Partition({1, 1}));
  CHECK(j11.at(Partition({2})) == UniPoly(Rational(-1)));
  CHECK(j11.at(Partition({1, 1})) == UniPoly(Rational(1)));

  auto j3 = jack_powersum(Partition({3}));
  CHECK(j3.at(Partition({3})) == UniPoly::monomial(2, Rational(2)));  // 2 alpha^2 p_3
  CHECK(j3.at(Partition({2, 1})) == UniPoly::monomial(1, Rational(3)));
  CHECK(j3.at(Partition({1, 1, 1})) == UniPoly(Rational(1)));

  auto j21 = jack_powersum(Partition({2, 1}));
  CHECK(j21.at(Partition({3})) == UniPoly::monomial(1, Rational(-1)));
  CHECK(j21.at(Partition({2, 1})) ==
        UniPoly(std::vector<Rational>{Rational(-1), Rational(1)}));  // (alpha - 1) p_2 p_1
  CHECK(j21.at(Partition({1, 1, 1})) == UniPoly(Rational(1)));

  auto j111 = jack_powersum(Partition({1, 1, 1}));
  CHECK(j111.at(Partition({3})) == UniPoly(Rational(2)));
  CHECK(j111.at(Partition({2, 1})) == UniPoly(Rational(-3)));
}

TEST_CASE("orthogonality and normalization") {
  for (unsigned n = 1; n <= 5; ++n) {
    auto parts = partitions_of(n);
    std::vector<std::map<Partition, UniPoly>> expansions;
    for (const auto& lambda : parts) expansions.push_back(jack_powersum(lambda));
    for (size_t i = 0; i < parts.size(); ++i) {
      for (size_t j = i + 1; j < parts.size(); ++j)
        CHECK(jack_inner(expansions[i], expansions[j]).is_zero());
      CHECK_FALSE(jack_inner(expansions[i], expansions[i]).is_zero());
      // [m_{1^n}] J_lambda = n!; only rho = 1^n contributes that monomial
      UniPoly unit;
      Partition ones(std::vector<unsigned>(n, 1));
      for (const auto& [rho, coeff] : expansions[i]) {
        const auto& mono = powersum_in_monomial(rho);
        auto it = mono.find(ones);
        if (it != mono.end()) unit += coeff * Rational(it->second);
      }
      CHECK(unit == UniPoly(Rational(factorial(n))));
    }
  }
}

TEST_CASE("symbolic and fixed alpha evaluations agree") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n))
      for (const auto& rho : partitions_of(n))
        for (const Rational& alpha : {Rational(2), Rational(5, 3), Rational(1, 2)})
          CHECK(theta(rho, lambda).eval(alpha) == theta_at(rho, lambda, alpha));
  }
}

TEST_CASE("character values") {
  // Ch_1(lambda) = |lambda| for any alpha, including beyond the symbolic bound
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(5, 3)}) {
    CHECK(jack_character_value(Partition({1}), Partition({3, 2}), alpha) ==
          QuadExt::from_rational(alpha, 5));
    CHECK(jack_character_value(Partition({1}), Partition({4, 3, 2, 1}), alpha) ==
          QuadExt::from_rational(alpha, 10));
  }
  // empty pi: constant 1
  CHECK(jack_character_value(Partition(), Partition({2, 1}), Rational(3)) ==
        QuadExt::from_rational(Rational(3), 1));
  // |lambda| < |pi| vanishes
  CHECK(jack_character_value(Partition({3, 2}), Partition({2, 1}), Rational(2)).is_zero());
}

TEST_CASE("alpha one reduces to symmetric group characters") {
  // lambda = (2,1): chi^{(2,1)}_{(2,1)} = 0, dim = 2
  CHECK(jack_character_value(Partition({2}), Partition({2, 1}), Rational(1)).is_zero());
  CHECK(jack_character_value(Partition({2}), Partition({3}), Rational(1)) ==
        QuadExt::from_rational(Rational(1), 6));
  CHECK(jack_character_value(Partition({2}), Partition({1, 1, 1}), Rational(1)) ==
        QuadExt::from_rational(Rational(1), -6));
  CHECK(symmetric_group_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(symmetric_group_character(Partition({2, 1}), Partition({3})) == -1);
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& pi : partitions_of(n)) {
        QuadExt v = jack_character_value(pi, lambda, Rational(1));
        CHECK(v.irr == 0);
        CHECK(v.rat == normalized_character_alpha1(pi, lambda));
      }
}

TEST_CASE("duality between alpha and one over alpha") {
  for (const Rational& alpha : {Rational(2), Rational(7, 2)}) {
    CHECK(duality_check(Partition({2}), Partition({3, 2}), alpha));
    CHECK(duality_check(Partition({3}), Partition({2, 2, 1}), alpha));
    CHECK(duality_check(Partition({2, 2}), Partition({3, 1, 1}), alpha));
  }
  // beyond the symbolic construction bound
  CHECK(duality_check(Partition({2}), Partition({4, 3, 2, 1}), Rational(3)));
}

TEST_CASE("rectangular recurrence satisfied by the oracle") {
  for (unsigned p = 1; p <= 2; ++p)
    for (unsigned q = 1; q <= 2; ++q) {
      CHECK(verify_lassalle_recurrence(Partition({2}), p, q, Rational(2)));
      CHECK(verify_lassalle_recurrence(Partition({3}), p, q, Rational(1, 2)));
      CHECK(verify_lassalle_recurrence(Partition({2, 2}), p, q, Rational(1)));
    }
}

TEST_CASE("block diagram character polynomials") {
  // Ch_(1) = |lambda| = sum p_i q_i
  MultirectPoly one = character_multirect(Partition({1}), 2, Rational(5, 3));
  MultivarPoly want(multirect_vars(2));
  want.add_term({1, 0, 1, 0}, Rational(1));
  want.add_term({0, 1, 0, 1}, Rational(1));
  CHECK(one.rat_part == want);
  CHECK(one.sqrt_part.is_zero());

  // Ch_(2) at alpha = 1: p q^2 - p^2 q
  MultirectPoly two1 = character_multirect(Partition({2}), 1, Rational(1));
  MultivarPoly w1(multirect_vars(1));
  w1.add_term({1, 2}, Rational(1));
  w1.add_term({2, 1}, Rational(-1));
  CHECK(two1.rat_part == w1);
  CHECK(two1.sqrt_part.is_zero());

  // alpha = 4 has a rational square root: 2 p q^2 - 1/2 p^2 q - 3/2 p q
  MultirectPoly two4 = character_multirect(Partition({2}), 1, Rational(4));
  MultivarPoly w4(multirect_vars(1));
  w4.add_term({1, 2}, Rational(2));
  w4.add_term({2, 1}, Rational(-1, 2));
  w4.add_term({1, 1}, Rational(-3, 2));
  CHECK(two4.rat_part == w4);
  CHECK(two4.sqrt_part.is_zero());

  // alpha = 2 keeps everything on the sqrt side
  MultirectPoly two2 = character_multirect(Partition({2}), 1, Rational(2));
  MultivarPoly w2(multirect_vars(1));
  w2.add_term({1, 2}, Rational(1));
  w2.add_term({2, 1}, Rational(-1, 2));
  w2.add_term({1, 1}, Rational(-1, 2));
  CHECK(two2.rat_part.is_zero());
  CHECK(two2.sqrt_part == w2);

  // evaluation agrees with the direct character
  for (unsigned p = 1; p <= 3; ++p)
    for (unsigned q = 1; q <= 3; ++q)
      CHECK(multirect_value(two2, {p}, {q}) ==
            jack_character_value(Partition({2}), Partition(std::vector<unsigned>(p, q)),
                                 Rational(2)));

  // parts equal to one peel off as falling factorials
  MultirectPoly ones = character_multirect(Partition({2, 1, 1}), 1, Rational(2));
  for (unsigned p = 1; p <= 3; ++p)
    for (unsigned q = 2; q <= 4; ++q)
      CHECK(multirect_value(ones, {p}, {q}) ==
            jack_character_value(Partition({2, 1, 1}), Partition(std::vector<unsigned>(p, q)),
                                 Rational(2)));
  CHECK_THROWS_AS(character_multirect(Partition({2}), 0, Rational(1)), std::invalid_argument);
}
