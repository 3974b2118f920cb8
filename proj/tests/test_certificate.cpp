#include "doctest.h"
#include "oracles.hpp"
#include "pmcert/certificate.hpp"
#include "pmcert/prover.hpp"
#include "test_util.hpp"

using namespace pmcert;
using test::cmatrix;
using test::matrix;

namespace {

ConstMatrix oracle_certificate(const PrimeField& f, const Order& sigma, const PolyMatrix& fm, const PolyMatrix& p) {
  std::vector<std::int64_t> s(sigma.entries().begin(), sigma.entries().end());
  return oracle::cooked(oracle::certificate(s, oracle::raw(fm), oracle::raw(p), f.modulus()), fm.cols());
}

// Three kinds of P: random row degrees, one heavy row, one heavy column.
PolyMatrix random_basis_shape(const PrimeField& f, SeededRng& rng, std::size_t m, std::int64_t top) {
  PolyMatrix p(m, m);
  const auto kind = rng.uniform_below(3);
  const std::size_t heavy = rng.uniform_below(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t row_len = 1 + rng.uniform_below(static_cast<std::size_t>(top) + 2);
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t len = row_len;
      if (kind == 1) len = i == heavy ? static_cast<std::size_t>(top) + 1 : 1;
      if (kind == 2) len = j == heavy ? static_cast<std::size_t>(top) + 1 : 1;
      if (rng.uniform_below(5) == 0) len = 0;
      std::vector<FieldElem> c(len);
      for (auto& x : c) x = f.sample(rng, false);
      p(i, j) = Poly(std::move(c));
    }
  }
  return p;
}

}  // namespace

TEST_CASE("certificate examples") {
  const PrimeField f(97);
  const Order sigma({1});
  const auto p = matrix({{{0, 1}, {}}, {{}, {1}}});
  const auto fm = matrix({{{1}}, {{}}});
  const auto want = cmatrix({{1}, {0}});
  CHECK(compute_certificate_naive(f, sigma, fm, p) == want);
  CHECK(compute_certificate_rowdeg(f, sigma, fm, p) == want);
  CHECK(compute_certificate_coldeg(f, sigma, fm, p) == want);
  CHECK(compute_certificate(f, sigma, fm, p) == want);

  CHECK(compute_certificate_naive(f, sigma, PolyMatrix(2, 1), p).is_zero());
  CHECK(compute_certificate_rowdeg(f, sigma, PolyMatrix(2, 1), p).is_zero());
  CHECK(compute_certificate_coldeg(f, sigma, PolyMatrix(2, 1), p).is_zero());

  const auto pc = matrix({{{3}, {4}}, {{5}, {6}}});
  CHECK(compute_certificate_naive(f, sigma, fm, pc).is_zero());
  CHECK(compute_certificate_rowdeg(f, sigma, fm, pc).is_zero());
  CHECK(compute_certificate_coldeg(f, sigma, fm, pc).is_zero());
}

TEST_CASE("certificate argument checks") {
  const PrimeField f(97);
  const auto p = matrix({{{0, 0, 1}, {}}, {{}, {1}}});
  const auto fm = matrix({{{1}}, {{}}});
  CHECK_THROWS_AS(compute_certificate_rowdeg(f, Order({1}), fm, p), DegreeTooLarge);
  CHECK_THROWS_AS(compute_certificate_coldeg(f, Order({1}), fm, p), DegreeTooLarge);
  CHECK_NOTHROW(compute_certificate(f, Order({1}), fm, p));
  CHECK_THROWS_AS(compute_certificate_naive(f, Order({1, 1}), fm, p), DimensionMismatch);
  CHECK_THROWS_AS(compute_certificate_naive(f, Order({1}), fm, PolyMatrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(compute_certificate(f, Order({1}), matrix({{{1}}}), p), DimensionMismatch);
}

TEST_CASE("all variants agree with the oracle") {
  for (std::uint64_t mod : {std::uint64_t{5}, std::uint64_t{10007}, PrimeField::kMersenne61}) {
    const PrimeField f(mod);
    SeededRng rng(mod * 3 + 1);
    for (int t = 0; t < 500; ++t) {
      const std::size_t m = 1 + rng.uniform_below(5);
      const std::size_t n = 1 + rng.uniform_below(5);
      std::vector<std::int64_t> s(n);
      for (auto& x : s) x = 1 + static_cast<std::int64_t>(rng.uniform_below(6));
      const Order sigma(s);
      const auto fm = truncate_columns(test::random_matrix(f, rng, m, n, 6), TruncOrder(s));
      const auto p = random_basis_shape(f, rng, m, sigma.max() + static_cast<std::int64_t>(rng.uniform_below(3)));
      const auto pt = truncate(p, static_cast<std::size_t>(sigma.max()) + 1);

      const auto naive = compute_certificate_naive(f, sigma, fm, p);
      CHECK(naive == oracle_certificate(f, sigma, fm, p));
      CHECK(compute_certificate_naive(f, sigma, fm, pt) == naive);
      CHECK(compute_certificate_rowdeg(f, sigma, fm, pt) == naive);
      CHECK(compute_certificate_coldeg(f, sigma, fm, pt) == naive);
      CHECK(compute_certificate(f, sigma, fm, p) == naive);
    }
  }
}

TEST_CASE("loop traces respect the sparsity bounds") {
  const PrimeField f(10007);
  SeededRng rng(55);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng.uniform_below(5);
    const std::size_t n = 1 + rng.uniform_below(5);
    std::vector<std::int64_t> s(n);
    for (auto& x : s) x = 1 + static_cast<std::int64_t>(rng.uniform_below(6));
    const Order sigma(s);
    const auto fm = truncate_columns(test::random_matrix(f, rng, m, n, 6), TruncOrder(s));
    const auto p = truncate(random_basis_shape(f, rng, m, sigma.max()), static_cast<std::size_t>(sigma.max()) + 1);

    CertificateTrace rt;
    compute_certificate_rowdeg(f, sigma, fm, p, &rt);
    CertificateTrace ct;
    compute_certificate_coldeg(f, sigma, fm, p, &ct);
    REQUIRE(rt.steps.size() == static_cast<std::size_t>(sigma.max()));
    REQUIRE(ct.steps.size() == static_cast<std::size_t>(sigma.max()));
    CHECK(rt.gamma >= 1);
    CHECK(rt.gamma * sigma.total() >= rt.degree_sum);
    for (const auto& st : rt.steps) {
      CHECK(static_cast<std::int64_t>(st.index_set) * st.k <= rt.degree_sum);
      CHECK(static_cast<std::int64_t>(st.order_set) * st.k <= sigma.total());
      CHECK(st.a_rows == st.index_set);
    }
    for (const auto& st : ct.steps) {
      CHECK(static_cast<std::int64_t>(st.index_set) * st.k <= ct.degree_sum);
      CHECK(st.a_cols == st.index_set);
    }
  }
}

TEST_CASE("unbalanced traces") {
  const PrimeField f(10007);
  SeededRng rng(9);
  constexpr std::int64_t kD = 64;
  const Order sigma({kD / 4, kD / 4, kD / 4, kD / 4});
  const auto fm = truncate_columns(test::random_matrix(f, rng, 4, 4, kD), TruncOrder(std::vector<std::int64_t>(4, kD / 4)));

  // Row degrees (D, 0, 0, 0).
  PolyMatrix rows_heavy(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<FieldElem> c(i == 0 ? kD + 1 : 1);
      for (auto& x : c) x = f.sample(rng, true);
      rows_heavy(i, j) = Poly(std::move(c));
    }
  }
  CHECK(choose_certificate_variant(rows_heavy) == CertificateVariant::rowdeg);
  CertificateTrace rt;
  const auto c1 = compute_certificate(f, sigma, fm, rows_heavy, &rt);
  CHECK(c1 == compute_certificate_naive(f, sigma, fm, rows_heavy));
  for (const auto& st : rt.steps) CHECK(st.a_rows == 1);

  // Column degrees (D, 0, 0, 0).
  PolyMatrix cols_heavy(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<FieldElem> c(j == 0 ? kD + 1 : 1);
      for (auto& x : c) x = f.sample(rng, true);
      cols_heavy(i, j) = Poly(std::move(c));
    }
  }
  CHECK(choose_certificate_variant(cols_heavy) == CertificateVariant::coldeg);
  CertificateTrace ct;
  const auto c2 = compute_certificate(f, sigma, fm, cols_heavy, &ct);
  CHECK(c2 == compute_certificate_naive(f, sigma, fm, cols_heavy));
  for (const auto& st : ct.steps) CHECK(st.a_cols == 1);

  // x^{sigma_max} I: balanced, tie goes to the row variant.
  PolyMatrix diag(4, 4);
  for (std::size_t i = 0; i < 4; ++i) diag(i, i) = Poly::monomial(f.one(), kD / 4);
  CHECK(choose_certificate_variant(diag) == CertificateVariant::rowdeg);
  CHECK(compute_certificate_rowdeg(f, sigma, fm, diag) == compute_certificate_naive(f, sigma, fm, diag));
  CHECK(compute_certificate_coldeg(f, sigma, fm, diag) == compute_certificate_naive(f, sigma, fm, diag));

  // sigma = (1, ..., 1): a single iteration.
  const Order ones({1, 1, 1});
  const auto f1 = truncate_columns(test::random_matrix(f, rng, 4, 3, 1), TruncOrder({1, 1, 1}));
  CertificateTrace one;
  const auto p1 = truncate(rows_heavy, 2);
  compute_certificate_rowdeg(f, ones, f1, p1, &one);
  REQUIRE(one.steps.size() == 1);
  CHECK(one.steps[0].k == 1);
  CHECK(one.steps[0].b_cols == 3);
}

TEST_CASE("certificate closes the truncated identity for approximant bases") {
  const PrimeField f(10007);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SeededRng rng(seed);
    const std::size_t m = 1 + rng.uniform_below(4);
    const std::size_t n = 1 + rng.uniform_below(4);
    const auto inst = gen_random_instance(f, m, n, SigmaProfile::random_max(6), ShiftProfile::uniform_range(-2, 2), seed);
    const auto p = iterative_appbas(f, inst);
    const auto c = compute_certificate(f, inst.sigma, inst.f, p);
    CHECK(mul_rem_orders(f, p, inst.f, order_plus_one(inst.sigma)) == times_x_powers(c, inst.sigma));
    const auto full = mul_naive(f, p, inst.f);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        CHECK(full(i, j).coeff(static_cast<std::size_t>(inst.sigma[j])) == c(i, j));
      }
    }
  }
}
