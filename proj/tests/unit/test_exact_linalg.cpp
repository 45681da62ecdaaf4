#include <doctest.h>

#include <random>

#include "incalg/errors.hpp"
#include "incalg/matrix.hpp"

using namespace incalg;

namespace {

Mat random_mat(std::mt19937& rng, std::size_t r, std::size_t c, Field f = Field::rationals()) {
  std::uniform_int_distribution<int> d(-1, 1);
  Mat m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays exact past int64") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((Rational(3, 7) / Rational(3, 7)) == Rational(1));
  Rational big(std::int64_t{1} << 62);
  const Rational sq = big * big * big;
  CHECK_FALSE(sq.is_small());
  CHECK(sq.to_mpq() == mpq_class(mpz_class(1) << 186));
  CHECK(sq / (big * big) == big);
  CHECK((sq - sq).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("prime fields") {
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  const Field f = Field::prime(7);
  for (int a = 1; a < 7; ++a) CHECK((Scalar(a, f) * Scalar(a, f).inverse()).is_one());
  CHECK(Scalar(-1, f) == Scalar(6, f));
  CHECK(Scalar(Rational(1, 2), f) * Scalar(2, f) == Scalar::one(f));
}

TEST_CASE("rank examples") {
  CHECK(rank(Mat::identity(4)) == 4);
  CHECK(rank(Mat::zero(3, 5)) == 0);
  CHECK(rank(Mat{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Mat{{1, 2}, {3, 4}}).cols() == 0);
  CHECK(kernel_basis(Mat::zero(2, 3)).cols() == 3);
  const Mat k = kernel_basis(Mat{{1, 1}});
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK_FALSE(k.is_zero());
}

TEST_CASE("quotient and solve examples") {
  const auto all = quotient_basis(3, Mat::identity(3));
  CHECK(all.representatives.cols() == 0);
  const auto none = quotient_basis(3, Mat::zero(3, 0));
  CHECK(none.projection * none.representatives == Mat::identity(3));
  const Mat b{{1}, {-2}, {5}};
  CHECK(*solve(Mat::identity(3), b) == b);
  CHECK_FALSE(solve(Mat{{1, 1}, {1, 1}}, Mat{{1}, {0}}).has_value());
  CHECK_THROWS_AS(solve_or_throw(Mat{{0}}, Mat{{1}}), NoSolution);
}

TEST_CASE("random matrices: rank-nullity, kernels, solve, quotients") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rng() % 8;
    const std::size_t c = rng() % 8;
    const Mat a = random_mat(rng, r, c);
    const Mat k = kernel_basis(a);
    CAPTURE(a.to_string());
    CHECK(rank(a) + k.cols() == c);
    CHECK(rank(k) == k.cols());
    CHECK((a * k).is_zero());
    CHECK(image_basis(a).cols() == rank(a));

    const Mat x = random_mat(rng, c, 1);
    const auto y = solve(a, a * x);
    REQUIRE(y.has_value());
    CHECK(a * *y == a * x);

    const auto q = quotient_basis(r, a);
    CHECK(q.representatives.cols() == r - rank(a));
    CHECK(q.projection * q.representatives == Mat::identity(q.representatives.cols()));
    CHECK((q.projection * a).is_zero());
  }
}

TEST_CASE("ranks of small 0/1/-1 matrices agree over Q and F_32003") {
  // Every minor of an 8x8 matrix with entries in {-1,0,1} is at most 8^4 =
  // 4096 in absolute value (Hadamard), so it vanishes mod 32003 only if it
  // is zero.
  std::mt19937 rng(7);
  const Field fp = Field::prime(kDefaultPrime);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat a = random_mat(rng, 1 + rng() % 8, 1 + rng() % 8);
    CHECK(rank(a) == rank(a.change_field(fp)));
  }
}

TEST_CASE("extend_basis picks independent columns left to right") {
  const Mat base{{1}, {0}, {0}};
  const Mat cand{{2, 0, 1}, {0, 1, 1}, {0, 0, 0}};
  const Mat e = extend_basis(base, cand);
  REQUIRE(e.cols() == 1);
  CHECK(e == Mat{{0}, {1}, {0}});
}
