#include <cstdint>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "trip_jones/laurent_poly.hpp"

using namespace trip_jones;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i)
    p.accumulate(static_cast<std::int64_t>(rng() % 21) - 10, static_cast<std::int64_t>(rng() % 11) - 5);
  return p;
}

}  // namespace

TEST(LaurentPoly, CanonicalForm) {
  LaurentPoly p{{3, 1}, {-1, 2}, {3, -1}};
  EXPECT_EQ(p, LaurentPoly::monomial(-1, 2));
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_TRUE((LaurentPoly::monomial(2) - LaurentPoly::monomial(2)).is_zero());
}

TEST(LaurentPoly, Examples) {
  EXPECT_EQ(LaurentPoly::monomial(-1) * LaurentPoly::monomial(1), LaurentPoly::one());
  EXPECT_EQ(pow(LaurentPoly::monomial(3, -1), -3), LaurentPoly::monomial(-9, -1));
  const auto d = LaurentPoly::loop_factor();
  EXPECT_EQ(d * d, (LaurentPoly{{-4, 1}, {0, 2}, {4, 1}}));
}

TEST(LaurentPoly, PowEdgeCases) {
  const auto d = LaurentPoly::loop_factor();
  EXPECT_EQ(pow(d, 0), LaurentPoly::one());
  EXPECT_EQ(pow(d, 3), d * d * d);
  EXPECT_EQ(pow(LaurentPoly::monomial(2, -1), -2), LaurentPoly::monomial(-4, 1));
  EXPECT_THROW(pow(d, -1), ValidationError);
  EXPECT_THROW(pow(LaurentPoly::monomial(1, 2), -1), ValidationError);
}

TEST(LaurentPoly, RingAxioms) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly::zero());
    EXPECT_EQ(a * LaurentPoly::one(), a);
    EXPECT_EQ(-(-a), a);
  }
}

TEST(LaurentPoly, OverflowIsDetected) {
  const auto big = LaurentPoly::monomial(0, std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + LaurentPoly::one(), OverflowError);
  EXPECT_THROW(big * LaurentPoly::monomial(1, 2), OverflowError);
}

TEST(Render, Examples) {
  EXPECT_EQ(render(LaurentPoly::one()), "1");
  EXPECT_EQ(render(LaurentPoly{{-16, -1}, {-12, 1}, {-4, 1}}), "-t^-4 + t^-3 + t^-1");
  EXPECT_EQ(render(LaurentPoly{{-2, 1}}), "q^-2 [non-integral t-powers]");
  EXPECT_EQ(render(LaurentPoly{{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}}),
            "t^-2 - t^-1 + 1 - t + t^2");
  EXPECT_EQ(render(LaurentPoly{{-28, -2}, {0, -3}, {4, 2}}), "-2t^-7 - 3 + 2t");
  EXPECT_EQ(render(LaurentPoly{}), "0");
  EXPECT_EQ(render(LaurentPoly{{-7, 1}, {-3, -1}, {5, -1}}, Variable::q), "q^-7 - q^-3 - q^5");
  EXPECT_EQ(render(LaurentPoly{{4, 1}}, Variable::q), "q^4");
}

TEST(JsonTerms, Format) {
  const LaurentPoly p{{-16, -1}, {-12, 1}, {-4, 1}};
  EXPECT_EQ(to_json_terms(p).dump(),
            R"([{"coeff":-1,"exp_quarter":-16},{"coeff":1,"exp_quarter":-12},{"coeff":1,"exp_quarter":-4}])");
  EXPECT_EQ(to_json_terms(LaurentPoly{}).dump(), "[]");
}

TEST(JsonTerms, RoundTrip) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng);
    const auto j = to_json_terms(p);
    EXPECT_EQ(from_json_terms(j), p);
    EXPECT_EQ(to_json_terms(from_json_terms(j)), j);
  }
}

TEST(JsonTerms, RejectsMalformedLists) {
  using nlohmann::json;
  EXPECT_THROW(from_json_terms(json::object()), ParseError);
  EXPECT_THROW(from_json_terms(json::parse(R"([{"exp_quarter":1}])")), ParseError);
  EXPECT_THROW(from_json_terms(json::parse(R"([{"exp_quarter":1,"coeff":0}])")), ParseError);
  EXPECT_THROW(from_json_terms(json::parse(
                   R"([{"exp_quarter":4,"coeff":1},{"exp_quarter":0,"coeff":1}])")),
               ParseError);
}

TEST(LaurentPoly, MirrorNegatesExponents) {
  const LaurentPoly p{{-16, -1}, {-12, 1}, {-4, 1}};
  EXPECT_EQ(p.mirrored(), (LaurentPoly{{16, -1}, {12, 1}, {4, 1}}));
  EXPECT_EQ(p.mirrored().mirrored(), p);
}
