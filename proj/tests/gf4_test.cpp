#include <gtest/gtest.h>

#include "g2graph/gf4.hpp"
#include "oracles.hpp"

namespace g2graph {
namespace {

const Gf4 O = Gf4::zero();
const Gf4 I = Gf4::one();
const Gf4 w = Gf4::omega();
const Gf4 W = Gf4::omega_bar();

TEST(Gf4, Addition) {
  EXPECT_EQ(w + W, I);
  for (Gf4 x : kGf4Elements) {
    EXPECT_EQ(x + O, x);
    EXPECT_EQ(x + x, O);
  }
  EXPECT_EQ(I + I, O);
}

TEST(Gf4, Multiplication) {
  EXPECT_EQ(w * w, W);
  EXPECT_EQ(w * W, I);
  for (Gf4 x : kGf4Elements) EXPECT_EQ(x * O, O);
}

TEST(Gf4, Conjugation) {
  EXPECT_EQ(conj(w), W);
  EXPECT_EQ(conj(I), I);
  EXPECT_EQ(conj(conj(W)), W);
  int fixed = 0;
  for (Gf4 x : kGf4Elements) fixed += conj(x) == x ? 1 : 0;
  EXPECT_EQ(fixed, 2);
}

TEST(Gf4, TraceAndNorm) {
  EXPECT_EQ(trace(w), I);
  EXPECT_EQ(trace(I), O);
  EXPECT_EQ(trace(O), O);
  for (Gf4 x : kGf4Elements) {
    EXPECT_TRUE(trace(x) == O || trace(x) == I);
    EXPECT_EQ(norm(x), x.is_zero() ? O : I);
  }
}

TEST(Gf4, MultiplicationTableMatchesPolynomialModel) {
  for (Gf4 a : kGf4Elements)
    for (Gf4 b : kGf4Elements) EXPECT_EQ((a * b).code(), oracle::poly_mul(a.code(), b.code()));
}

TEST(Gf4, FieldAxiomsExhaustive) {
  for (Gf4 a : kGf4Elements) {
    if (!a.is_zero()) {
      EXPECT_EQ(a * inverse(a), I);
      EXPECT_EQ(a * a * a, I);
    }
    for (Gf4 b : kGf4Elements) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(conj(a + b), conj(a) + conj(b));
      EXPECT_EQ(conj(a * b), conj(a) * conj(b));
      for (Gf4 c : kGf4Elements) {
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST(Gf4, Errors) {
  EXPECT_THROW(inverse(O), std::domain_error);
  EXPECT_THROW(Gf4::from_code(4), std::out_of_range);
}

TEST(Gf4, Rendering) {
  EXPECT_EQ(to_string(O), "0");
  EXPECT_EQ(to_string(I), "1");
  EXPECT_EQ(to_string(w), "w");
  EXPECT_EQ(to_string(W), "W");
}

}  // namespace
}  // namespace g2graph
