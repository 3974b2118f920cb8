#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pmcert/poly_matrix.hpp"
#include "test_util.hpp"

using namespace pmcert;
using test::e;
using test::poly;

TEST_CASE("poly normalization") {
  CHECK(Poly({e(0), e(0)}).is_zero());
  CHECK(Poly({e(1), e(0)}).length() == 1);
  CHECK(Poly().degree().is_neg_inf());
  CHECK(Poly().degree() < Degree(0));
  CHECK(Degree(-5) > Degree::neg_inf());
  CHECK_THROWS_AS(Poly().degree().value(), InvalidArgument);
  Poly a = poly({1, 2});
  a.set_coeff(1, e(0));
  CHECK(a == poly({1}));
  a.set_coeff(4, e(3));
  CHECK(a.degree() == Degree(4));
  CHECK(a.truncated(1) == poly({1}));
  CHECK(a.truncated(0).is_zero());
}

TEST_CASE("poly division") {
  const PrimeField f(7);
  const Poly a = poly({1, 2, 3, 4});
  const Poly b = poly({5, 1});
  const auto [q, r] = poly_divrem(f, a, b);
  CHECK(poly_add(f, poly_mul(f, q, b), r) == a);
  CHECK(r.degree() < b.degree());
}

TEST_CASE("mul_naive examples") {
  const PrimeField f(97);
  const auto a = test::matrix({{{0, 1}, {}}, {{}, {1}}});
  const auto b = test::matrix({{{1}}, {{}}});
  CHECK(mul_naive(f, a, b) == test::matrix({{{0, 1}}, {{}}}));
  CHECK(mul_naive(f, a, PolyMatrix::identity(2)) == a);
  CHECK(mul_naive(f, a, PolyMatrix(2, 3)).is_zero());
  CHECK_THROWS_AS(mul_naive(f, a, PolyMatrix(3, 1)), DimensionMismatch);
}

TEST_CASE("mul_rem_orders examples") {
  const PrimeField f(97);
  const auto x = test::matrix({{{0, 1}}});
  CHECK(mul_rem_orders(f, x, x, TruncOrder({2})).is_zero());
  CHECK(mul_rem_orders(f, test::matrix({{{1, 1}}}), test::matrix({{{1}}}), TruncOrder({1})) ==
        test::matrix({{{1}}}));
  CHECK_THROWS_AS(mul_rem_orders(f, x, x, TruncOrder({1, 2})), DimensionMismatch);
}

TEST_CASE("coefficient, evaluate, degrees") {
  const PrimeField f(7);
  const auto a = test::matrix({{{0, 1}, {}}, {{}, {1}}});
  CHECK(coefficient(a, 0) == test::cmatrix({{0, 0}, {0, 1}}));
  CHECK(coefficient(a, 5).is_zero());
  CHECK(coefficient(PolyMatrix(2, 2), 3).is_zero());
  CHECK(evaluate(f, test::matrix({{{1, 1}}}), e(3)) == test::cmatrix({{4}}));

  const auto rd = row_degrees(a);
  CHECK(rd == std::vector<Degree>{Degree(1), Degree(0)});
  CHECK(row_degrees(PolyMatrix::identity(3)) == std::vector<Degree>(3, Degree(0)));
  const auto cd = column_degrees(test::matrix({{{1}, {}}, {{2}, {}}}));
  CHECK(cd[1].is_neg_inf());
}

TEST_CASE("shifted row degree and leading matrix") {
  const auto p = test::matrix({{{0, 1}, {1}}, {{2}, {0, 1}}});
  const Shift s({0, 1});
  CHECK(shifted_row_degree(p, s) == std::vector<Degree>{Degree(1), Degree(2)});
  CHECK(s_leading_matrix(p, s) == test::cmatrix({{1, 1}, {0, 1}}));
  CHECK(shifted_row_degree(p, Shift::zero(2)) == row_degrees(p));
  CHECK_THROWS_AS(shifted_row_degree(p, Shift({0})), DimensionMismatch);
  CHECK(s_leading_matrix(PolyMatrix::identity(3), Shift::zero(3)) == ConstMatrix::identity(3));

  auto z = p;
  z(1, 0) = Poly();
  z(1, 1) = Poly();
  const auto l = s_leading_matrix(z, s);
  CHECK(l(1, 0).is_zero());
  CHECK(l(1, 1).is_zero());
  CHECK(shifted_row_degree(z, s)[1].is_neg_inf());
}

TEST_CASE("size measure") {
  CHECK(size_measure(PolyMatrix::identity(2)) == 4);
  CHECK(size_measure(test::matrix({{{0, 1}, {}}, {{}, {1}}})) == 5);
  CHECK(size_measure(PolyMatrix(2, 2)) == 4);
  CHECK(size_measure(PolyMatrix(2, 3)) == 6);
}

TEST_CASE("left_vec_mul") {
  const PrimeField f(97);
  const auto a = test::matrix({{{0, 1}, {3}}, {{1}, {0, 0, 2}}});
  CHECK(left_vec_mul(f, test::cmatrix({{0, 1}}), a) == test::matrix({{{1}, {0, 0, 2}}}));
  CHECK(left_vec_mul(f, test::cmatrix({{0, 0}}), a).is_zero());
  CHECK(left_vec_mul(f, test::cmatrix({{1, 1}}), test::matrix({{{0, 1}}, {{1}}})) == test::matrix({{{1, 1}}}));
  CHECK(left_vec_mul(f, test::cmatrix({{1, 1}}), a, 2) == test::matrix({{{1, 1}, {3}}}));
  CHECK_THROWS_AS(left_vec_mul(f, test::cmatrix({{1}}), a), DimensionMismatch);
}

TEST_CASE("properties on random matrices") {
  for (std::uint64_t p : {std::uint64_t{97}, PrimeField::kMersenne61}) {
    const PrimeField f(p);
    SeededRng rng(p + 3);
    for (int t = 0; t < 200; ++t) {
      const std::size_t m = 1 + rng.uniform_below(4);
      const std::size_t k = 1 + rng.uniform_below(4);
      const std::size_t n = 1 + rng.uniform_below(4);
      const auto a = test::random_matrix(f, rng, m, k, 5);
      const auto b = test::random_matrix(f, rng, k, n, 5);
      std::vector<std::int64_t> d(n);
      for (auto& x : d) x = 1 + static_cast<std::int64_t>(rng.uniform_below(8));
      const TruncOrder to(d);

      const auto full = mul_naive(f, a, b);
      CHECK(full == oracle::cooked(oracle::product(oracle::raw(a), oracle::raw(b), p)));
      CHECK(mul_rem_orders(f, a, b, to) == truncate_columns(full, to));
      CHECK(mul_rem_orders(f, a, b, to) == oracle::cooked(oracle::truncate_cols(oracle::raw(full), d)));

      const FieldElem x = f.sample(rng, false);
      CHECK(evaluate(f, full, x) == const_mul(f, evaluate(f, a, x), evaluate(f, b, x)));
      CHECK(evaluate(f, a, f.one()) == test::sum_of_coefficients(f, a));
      CHECK(evaluate(f, a, f.zero()) == coefficient(a, 0));

      // Every stored entry is normalized.
      for (std::size_t i = 0; i < full.rows(); ++i) {
        for (std::size_t j = 0; j < full.cols(); ++j) {
          const auto c = full(i, j).coeffs();
          CHECK((c.empty() || !c.back().is_zero()));
        }
      }

      // Adding a constant to the shift adds it to every s-row degree.
      std::vector<std::int64_t> s(k), s2(k);
      for (std::size_t j = 0; j < k; ++j) {
        s[j] = static_cast<std::int64_t>(rng.uniform_below(5)) - 2;
        s2[j] = s[j] + 3;
      }
      const auto r1 = shifted_row_degree(a, Shift(s));
      const auto r2 = shifted_row_degree(a, Shift(s2));
      for (std::size_t i = 0; i < m; ++i) {
        if (r1[i].is_neg_inf()) {
          CHECK(r2[i].is_neg_inf());
        } else {
          CHECK(r2[i].value() == r1[i].value() + 3);
        }
      }
      if (m == k) CHECK(s_leading_matrix(a, Shift(s)) == s_leading_matrix(a, Shift(s2)));
    }
  }
}

TEST_CASE("evaluation cost") {
  const PrimeField f(PrimeField::kMersenne61, true);
  SeededRng rng(4);
  const auto a = test::random_matrix(f, rng, 3, 4, 9);
  f.reset_tally();
  evaluate(f, a, e(12345));
  CHECK(f.tally().total() <= static_cast<std::uint64_t>(2 * (size_measure(a) - 12)));
  f.reset_tally();
  evaluate(f, a, f.one());
  CHECK(f.tally().mul == 0);
}
