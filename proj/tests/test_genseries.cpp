#include <catch2/catch_amalgamated.hpp>

#include "jackmaps/genseries.hpp"

using namespace jackmaps;

TEST_CASE("trivial series values") {
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(5, 3)}) {
    // empty face type: the empty map contributes 1
    CHECK(genseries_numeric(Partition(), Partition({3, 1}), alpha) ==
          QuadExt::from_rational(alpha, 1));
    // single face of size one: |lambda|
    CHECK(genseries_numeric(Partition({1}), Partition({3, 1}), alpha) ==
          QuadExt::from_rational(alpha, 4));
    CHECK(genseries_numeric(Partition({1}), Partition({5}), Rational(7, 3)) ==
          QuadExt::from_rational(Rational(7, 3), 5));
  }
}

TEST_CASE("series equals oracle at small sizes") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const Partition& pi : partitions_of(n))
      for (unsigned m = 1; m <= 4; ++m)
        for (const Partition& lambda : partitions_of(m))
          for (const Rational& alpha : {Rational(1), Rational(2)})
            CHECK(genseries_numeric(pi, lambda, alpha) ==
                  jack_character_value(pi, lambda, alpha));
}

TEST_CASE("aggregate bookkeeping") {
  SeriesAggregate agg = aggregate_maps(Partition({2, 1}));
  CHECK(agg.map_count == 15);
  uint64_t labeled = 0;
  for (const auto& cls : agg.classes) labeled += cls.count;
  CHECK(labeled == 15);
  // keys sorted and unique
  for (size_t i = 1; i < agg.classes.size(); ++i)
    CHECK(agg.classes[i - 1].key < agg.classes[i].key);
  // worker count must not change anything
  SeriesOptions three;
  three.jobs = 3;
  SeriesAggregate agg3 = aggregate_maps(Partition({2, 1}), three);
  REQUIRE(agg3.classes.size() == agg.classes.size());
  CHECK(agg3.map_count == agg.map_count);
  for (size_t i = 0; i < agg.classes.size(); ++i) {
    CHECK(agg3.classes[i].key == agg.classes[i].key);
    CHECK(agg3.classes[i].count == agg.classes[i].count);
    CHECK(agg3.classes[i].weight_sum == agg.classes[i].weight_sum);
  }
  for (const Rational& alpha : {Rational(2), Rational(5, 3)})
    CHECK(series_value(agg, Partition({2, 1}), alpha) ==
          series_value(agg3, Partition({2, 1}), alpha));
}

TEST_CASE("streaming evaluation matches the aggregate route") {
  SeriesOptions opts;
  for (unsigned n = 1; n <= 4; ++n)
    for (const Partition& pi : partitions_of(n))
      for (const Rational& alpha : {Rational(1), Rational(3)}) {
        Partition lambda({2, 1});
        uint64_t seen = 0;
        QuadExt streamed = detail::genseries_streaming(pi, lambda, alpha, opts, &seen);
        CHECK(streamed == genseries_numeric(pi, lambda, alpha));
        CHECK(seen == static_cast<uint64_t>(double_factorial_odd(n).convert_to<uint64_t>()));
      }
}

TEST_CASE("symbolic series golden for one bigon face") {
  SeriesSymbolic sym = genseries_symbolic(Partition({2}), 1);
  MultivarPoly want(series_vars(1));  // u1, v1, gamma
  want.add_term({1, 2, 0}, Rational(1));   // u v^2
  want.add_term({2, 1, 0}, Rational(1));   // u^2 v
  want.add_term({1, 1, 1}, Rational(-1));  // -gamma u v
  CHECK(sym.poly == want);
  CHECK(series_positivity_ok(sym));
  CHECK_THROWS_AS(genseries_symbolic(Partition({2}), 0), std::invalid_argument);
}

TEST_CASE("symbolic series substitutes back to numeric values") {
  for (const Partition& pi : {Partition({2}), Partition({3}), Partition({2, 1})}) {
    SeriesSymbolic sym = genseries_symbolic(pi, 2);
    for (const Rational& alpha : {Rational(1), Rational(2), Rational(5, 3)})
      for (unsigned q1 = 1; q1 <= 3; ++q1)
        for (unsigned q2 = 1; q2 <= q1; ++q2) {
          MultirectCoords mc;
          mc.p = {1, 2};
          mc.q = {q1, q2};
          CHECK(symbolic_value(sym, mc.p, mc.q, alpha) ==
                genseries_numeric(pi, multirect_diagram(mc), alpha));
        }
  }
}

TEST_CASE("specialized symbolic series equals the oracle polynomial") {
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(4)}) {
    SeriesSymbolic sym = genseries_symbolic(Partition({2}), 1);
    MultirectPoly series_side = substitute_symbolic(sym, alpha);
    MultirectPoly oracle_side = character_multirect(Partition({2}), 1, alpha);
    CHECK(series_side.rat_part == oracle_side.rat_part);
    CHECK(series_side.sqrt_part == oracle_side.sqrt_part);
  }
}

TEST_CASE("closed forms at the special alpha values") {
  for (const Partition& pi : {Partition({2}), Partition({3}), Partition({2, 2})})
    for (const Partition& lambda : {Partition({2, 1}), Partition({3, 2}), Partition({4})}) {
      CHECK(special_alpha_closed_form(pi, lambda, SpecialAlpha::Two) ==
            genseries_numeric(pi, lambda, Rational(2)));
      CHECK(special_alpha_closed_form(pi, lambda, SpecialAlpha::Half) ==
            genseries_numeric(pi, lambda, Rational(1, 2)));
    }
}

TEST_CASE("parts equal to one reduce to falling factorials") {
  for (const Rational& alpha : {Rational(1), Rational(2)}) {
    CHECK(verify_ones_reduction(Partition({2}), 1, Partition({3, 1}), alpha));
    CHECK(verify_ones_reduction(Partition({2}), 2, Partition({3, 2}), alpha));
    CHECK(verify_ones_reduction(Partition({3}), 1, Partition({2, 2, 1}), alpha));
  }
}

TEST_CASE("series satisfies the rectangular recurrence") {
  for (unsigned p = 1; p <= 2; ++p)
    for (unsigned q = 1; q <= 2; ++q)
      for (const Rational& alpha : {Rational(1), Rational(2)}) {
        CHECK(series_recurrence_residual(Partition({2}), p, q, alpha).is_zero());
        CHECK(series_recurrence_residual(Partition({3}), p, q, alpha).is_zero());
      }
}

TEST_CASE("alternative weight gives the same series at small sizes") {
  SeriesOptions alt;
  alt.kind = WeightKind::Lacroix;
  for (unsigned n = 1; n <= 3; ++n)
    for (const Partition& pi : partitions_of(n))
      for (const Partition& lambda : {Partition({2, 1}), Partition({3, 1})})
        CHECK(genseries_numeric(pi, lambda, Rational(2), alt) ==
              jack_character_value(pi, lambda, Rational(2)));
}

TEST_CASE("resource limits") {
  SeriesOptions plain;
  CHECK_THROWS_AS(genseries_numeric(Partition({8}), Partition({2}), Rational(1), plain),
                  ResourceError);
  CHECK_THROWS_AS(genseries_numeric(Partition({5, 3}), Partition({2}), Rational(1), plain),
                  ResourceError);
  SeriesOptions ext;
  ext.extended = true;
  CHECK_THROWS_AS(genseries_numeric(Partition({10}), Partition({2}), Rational(1), ext),
                  ResourceError);
  CHECK_THROWS_AS(aggregate_maps(Partition({8}), ext), ResourceError);
  // the guard message carries the pairing count
  try {
    genseries_numeric(Partition({8}), Partition({2}), Rational(1), plain);
    FAIL("expected a resource refusal");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find(double_factorial_odd(8).str()) != std::string::npos);
  }
}

TEST_CASE("counterexample input validation") {
  CHECK_THROWS_AS(counterexample_report({3, 2}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(counterexample_report({1, 2, 3}, Rational(1)), std::invalid_argument);
}
