// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pmcert/certificate.hpp"
#include "pmcert/certifier.hpp"
#include "pmcert/commands.hpp"
#include "pmcert/exact_checks.hpp"
#include "pmcert/formats.hpp"
#include "pmcert/linalg.hpp"
#include "pmcert/prover.hpp"
#include "pmcert/truncated_product.hpp"
#include "test_util.hpp"

using namespace pmcert;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("pmcert_acc_" + tag + "_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Instance make_instance(std::uint64_t p, Order sigma, PolyMatrix f, Shift s) {
  Instance inst;
  inst.modulus = p;
  inst.sigma = std::move(sigma);
  inst.f = std::move(f);
  inst.shift = std::move(s);
  return inst;
}

std::vector<std::int64_t> as_vector(std::span<const std::int64_t> s) { return {s.begin(), s.end()}; }

// Writes inst, its prover basis and certificate; returns the three paths.
struct Triple {
  std::string inst, basis, cert;
};

Triple write_triple(const TempDir& dir, const std::string& stem, const Instance& inst, const PolyMatrix& p,
                    const ConstMatrix& c) {
  Triple t{dir.file(stem + ".inst"), dir.file(stem + ".basis"), dir.file(stem + ".cert")};
  write_file(t.inst, serialize_instance(inst));
  write_file(t.basis, serialize_basis({inst.modulus, p}));
  write_file(t.cert, serialize_certificate({inst.modulus, c}));
  return t;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t by_kind[4] = {0, 0, 0, 0};
  for (std::uint64_t mod : {std::uint64_t{97}, PrimeField::kMersenne61}) {
    const PrimeField f(mod);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      SeededRng rng(seed * 7919 + mod);
      const std::size_t m = 1 + rng.uniform_below(5);
      const std::size_t n = 1 + rng.uniform_below(5);
      const auto kind = rng.uniform_below(4);
      Instance inst;
      PolyMatrix p;
      if (kind == 0) {
        // Prover output; staircase shifts give row-skewed bases.
        const ShiftProfile sp = seed % 3 == 0   ? ShiftProfile::zero()
                                : seed % 3 == 1 ? ShiftProfile::staircase(2)
                                                : ShiftProfile::uniform_range(-3, 3);
        inst = gen_random_instance(f, m, n, SigmaProfile::random_max(6), sp, seed);
        p = iterative_appbas(f, inst);
      } else {
        inst = gen_random_instance(f, m, n, SigmaProfile::random_max(6), ShiftProfile::zero(), seed);
        std::vector<std::int64_t> d(m);
        for (std::size_t i = 0; i < m; ++i) {
          // kind 1: one heavy row or column; kind 2: the transpose shape; kind 3: balanced.
          d[i] = kind == 3 ? 1 + static_cast<std::int64_t>(rng.uniform_below(3))
                           : (i == 0 ? inst.sigma.max() + static_cast<std::int64_t>(rng.uniform_below(3)) : 0);
        }
        p = kind == 2 ? test::random_column_reduced(f, rng, d) : test::random_row_reduced(f, rng, d);
      }
      ++by_kind[kind];
      ++cases;
      const auto pt = truncate(p, static_cast<std::size_t>(inst.sigma.max()) + 1);
      const auto naive = compute_certificate_naive(f, inst.sigma, inst.f, p);
      const auto row = compute_certificate_rowdeg(f, inst.sigma, inst.f, pt);
      const auto col = compute_certificate_coldeg(f, inst.sigma, inst.f, pt);
      const auto ora = oracle::cooked(
          oracle::certificate(as_vector(inst.sigma.entries()), oracle::raw(inst.f), oracle::raw(p), mod), n);
      if (!(naive == row && naive == col && naive == ora && compute_certificate(f, inst.sigma, inst.f, p) == naive)) {
        ++mismatches;
      }
    }
  }
  return {cases >= 500 && mismatches == 0,
          std::to_string(cases) + " instances (prover " + std::to_string(by_kind[0]) + ", row-skewed " +
              std::to_string(by_kind[1]) + ", column-skewed " + std::to_string(by_kind[2]) + ", balanced " +
              std::to_string(by_kind[3]) + "), " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion2() {
  TempDir dir("c2");
  const PrimeField f(PrimeField::kMersenne61);
  const char* shifts[] = {"zero", "range:-3:3", "staircase:1", "staircase:3"};
  std::size_t accepts = 0;
  std::size_t calls = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    SeededRng g(t + 5000);
    const std::size_t m = 1 + g.uniform_below(4);
    const std::size_t n = 1 + g.uniform_below(4);
    const auto inst =
        gen_random_instance(f, m, n, SigmaProfile::random_max(8), parse_shift_profile(shifts[t % 4]), t + 5000);
    const auto p = iterative_appbas(f, inst);
    const auto c = compute_certificate(f, inst.sigma, inst.f, p);
    const Triple tr = write_triple(dir, "t" + std::to_string(t), inst, p, c);
    for (std::uint64_t s = 0; s < 50; ++s) {
      VerifyOptions v;
      v.instance = tr.inst;
      v.basis = tr.basis;
      v.cert = tr.cert;
      v.seed = t * 1000 + s;
      std::ostringstream out;
      std::ostringstream err;
      ++calls;
      if (cmd_verify(v, out, err) == kExitAccept) ++accepts;
    }
  }
  return {accepts == 10000 && calls == 10000,
          std::to_string(accepts) + "/" + std::to_string(calls) + " honest verifications accepted"};
}

Outcome criterion3() {
  constexpr std::uint64_t kP = 5;
  const PrimeField f(kP);
  std::size_t candidates = 0;
  std::size_t discrepancies = 0;
  std::size_t library_disagreements = 0;
  std::size_t true_count = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    SeededRng rng(seed + 900);
    const std::size_t m = 1 + rng.uniform_below(3);
    const std::size_t n = 1 + rng.uniform_below(2);
    const ShiftProfile sp = seed % 2 == 0 ? ShiftProfile::zero() : ShiftProfile::uniform_range(-1, 1);
    const auto inst = gen_random_instance(f, m, n, SigmaProfile::random_max(3), sp, seed + 900);
    const auto b = iterative_appbas(f, inst);
    const auto rb = oracle::raw(b);

    std::vector<PolyMatrix> cands;
    cands.push_back(b);
    // Constant invertible multiple.
    cands.push_back(mul_naive(f, to_poly_matrix(test::random_invertible(f, rng, m)), b));
    // I + c x^a E_ij: unimodular, may or may not keep reducedness.
    if (m > 1) {
      for (int r = 0; r < 2; ++r) {
        PolyMatrix u = PolyMatrix::identity(m);
        const std::size_t i = rng.uniform_below(m);
        const std::size_t j = (i + 1 + rng.uniform_below(m - 1)) % m;
        u(i, j) = Poly::monomial(f.sample(rng, true), rng.uniform_below(3));
        cands.push_back(mul_naive(f, u, b));
      }
    }
    // x B and diag(x, 1, ..., 1) B: reduced approximant matrices that are not bases.
    PolyMatrix xb = b;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) xb(i, j) = poly_shift(b(i, j), 1);
    }
    cands.push_back(xb);
    PolyMatrix db = b;
    for (std::size_t j = 0; j < m; ++j) db(0, j) = poly_shift(b(0, j), 1);
    cands.push_back(db);
    // x^{sigma_max} I.
    PolyMatrix xi(m, m);
    for (std::size_t i = 0; i < m; ++i) xi(i, i) = Poly::monomial(f.one(), static_cast<std::size_t>(inst.sigma.max()));
    cands.push_back(xi);
    // A single corrupted coefficient.
    PolyMatrix bad = b;
    const std::size_t bi = rng.uniform_below(m);
    const std::size_t bj = rng.uniform_below(m);
    const std::size_t bk = rng.uniform_below(3);
    bad(bi, bj).set_coeff(bk, f.add(bad(bi, bj).coeff(bk), f.sample(rng, true)));
    cands.push_back(bad);

    for (const auto& cand : cands) {
      const auto rp = oracle::raw(cand);
      const auto rc = oracle::certificate(as_vector(inst.sigma.entries()), oracle::raw(inst.f), rp, kP);
      const bool conditions = oracle::conditions(inst, rp, rc).all();
      const bool truth = oracle::is_basis(inst, rp, rb) && oracle::is_s_reduced(rp, as_vector(inst.shift.entries()), kP);
      ++candidates;
      true_count += truth ? 1 : 0;
      if (conditions != truth) ++discrepancies;
      if (exact_conditions(f, inst, cand, oracle::cooked(rc, n)).all() != conditions) ++library_disagreements;
    }
  }
  return {candidates >= 300 && discrepancies == 0 && library_disagreements == 0,
          std::to_string(candidates) + " candidates (" + std::to_string(true_count) + " s-minimal bases), " +
              std::to_string(discrepancies) + " discrepancies, " + std::to_string(library_disagreements) +
              " library/oracle disagreements"};
}

Outcome criterion4() {
  const PrimeField f(10007);
  constexpr int kTrials = 2000;
  const std::uint64_t small_set = min_sampling_set_size(20);
  int small_accepts = 0;
  int full_accepts = 0;
  int tagged = 0;
  std::vector<Instance> insts;
  std::vector<PolyMatrix> bases;
  std::vector<ConstMatrix> certs;
  for (std::uint64_t s = 0; s < 20; ++s) {
    insts.push_back(gen_random_instance(f, 3, 2, SigmaProfile::uniform(10), ShiftProfile::zero(), 300 + s));
    bases.push_back(iterative_appbas(f, insts.back()));
    certs.push_back(compute_certificate(f, insts.back().sigma, insts.back().f, bases.back()));
  }
  TamperSpec spec;
  spec.target = TamperTarget::basis_coeff;
  spec.preserve_cheap_checks = true;
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t k = static_cast<std::size_t>(t) % insts.size();
    for (int pass = 0; pass < 2; ++pass) {
      SeededRng trng(static_cast<std::uint64_t>(t) * 2 + static_cast<std::uint64_t>(pass));
      const auto tr = tamper(f, insts[k], bases[k], certs[k], spec, trng);
      if (tr.tag) ++tagged;
      SeededRng crng(1'000'000 + static_cast<std::uint64_t>(t) * 2 + static_cast<std::uint64_t>(pass));
      CertifyOptions o;
      if (pass == 0) o.sampling_set_size = small_set;
      const bool acc = certify(f, insts[k], tr.basis, tr.certificate, crng, o).accepted;
      (pass == 0 ? small_accepts : full_accepts) += acc ? 1 : 0;
    }
  }
  const double fs_small = small_accepts / static_cast<double>(kTrials);
  const double fs_full = full_accepts / static_cast<double>(kTrials);
  return {tagged == 2 * kTrials && fs_small <= 0.55 && fs_full <= 0.01,
          "D = 20, |S| = " + std::to_string(small_set) + ": " + std::to_string(small_accepts) + "/" +
              std::to_string(kTrials) + " false accepts (" + fmt("%.4f", fs_small) + " <= 0.55); full S: " +
              std::to_string(full_accepts) + "/" + std::to_string(kTrials) + " (" + fmt("%.4f", fs_full) +
              " <= 0.01)"};
}

std::uint64_t parse_verify_ops(const std::string& out) {
  const std::string key = "verify: ";
  const auto pos = out.find(key);
  if (pos == std::string::npos) return 0;
  return std::stoull(out.substr(pos + key.size()));
}

Outcome criterion5() {
  TempDir dir("c5");
  const PrimeField f(PrimeField::kMersenne61, true);
  constexpr std::size_t m = 16;
  constexpr std::size_t n = 16;
  const auto inst = gen_random_instance(f, m, n, SigmaProfile::uniform(256), ShiftProfile::zero(), 2024);
  const auto p = iterative_appbas(f, inst);
  const auto c = compute_certificate(f, inst.sigma, inst.f, p);
  const Triple tr = write_triple(dir, "big", inst, p, c);

  VerifyOptions v;
  v.instance = tr.inst;
  v.basis = tr.basis;
  v.cert = tr.cert;
  v.seed = 7;
  v.count_ops = true;
  std::ostringstream out;
  std::ostringstream err;
  const int code = cmd_verify(v, out, err);
  const std::uint64_t verify_ops = parse_verify_ops(out.str());

  f.reset_tally();
  const bool baseline_ok = recompute_product_check(f, inst, p, c);
  const std::uint64_t naive_ops = f.tally().total();

  const double total_order = static_cast<double>(inst.sigma.total());
  double log_term = std::log2(total_order);
  for (auto s : inst.sigma.entries()) log_term += std::log2(static_cast<double>(s));
  const double linear = 5.0 * static_cast<double>(size_measure(p)) +
                        2.0 * m * (total_order + static_cast<double>(inst.sigma.max())) +
                        static_cast<double>((4 * m + 1) * n) + 4.0 * log_term;
  const double cubic = static_cast<double>(elimination_op_bound(m, m) + 2 * determinant_op_bound(m) +
                                           elimination_op_bound(m, m + n) + 2 * m + 2);
  const double bound = 1.1 * (linear + cubic);
  const double ratio = verify_ops == 0 ? 0 : static_cast<double>(naive_ops) / static_cast<double>(verify_ops);
  return {code == kExitAccept && baseline_ok && verify_ops > 0 && ratio >= 20 && static_cast<double>(verify_ops) <= bound,
          "D = 4096: verify " + std::to_string(verify_ops) + " ops, recompute " + std::to_string(naive_ops) +
              " ops, ratio " + fmt("%.1f", ratio) + " (>= 20); bound " + fmt("%.0f", bound)};
}

Outcome criterion6() {
  const PrimeField f(PrimeField::kMersenne61, true);
  constexpr std::size_t m = 16;
  constexpr std::size_t n = 16;
  constexpr std::int64_t kD = 4096;
  std::vector<std::int64_t> sig(n, 1);
  sig[0] = kD - static_cast<std::int64_t>(n) + 1;
  const Order sigma(sig);
  SeededRng rng(66);

  // Row-skewed: column 0 of F is w * g, so one row absorbs all of sigma_0.
  PolyMatrix fr(m, n);
  {
    std::vector<FieldElem> g(static_cast<std::size_t>(sig[0]));
    for (auto& x : g) x = f.sample(rng, true);
    const Poly gp(g);
    for (std::size_t i = 0; i < m; ++i) {
      fr(i, 0) = poly_scale(f, gp, f.sample(rng, true));
      for (std::size_t j = 1; j < n; ++j) fr(i, j) = Poly::constant(f.sample(rng, false));
    }
  }
  const auto ir = make_instance(f.modulus(), sigma, fr, Shift::zero(m));
  const auto pr = iterative_appbas(f, ir);
  const auto pr_t = truncate(pr, static_cast<std::size_t>(sigma.max()) + 1);
  std::int64_t top_row = 0;
  std::int64_t other_rows = 0;
  for (const Degree& d : row_degrees(pr)) {
    if (d.value() > top_row) {
      other_rows = std::max(other_rows, top_row);
      top_row = d.value();
    } else {
      other_rows = std::max(other_rows, d.value());
    }
  }
  f.reset_tally();
  const auto c_row = compute_certificate_rowdeg(f, sigma, fr, pr_t);
  const std::uint64_t row_ops = f.tally().total();
  f.reset_tally();
  mul_naive(f, pr, fr);
  const std::uint64_t row_naive = f.tally().total();
  const bool row_ok = c_row == compute_certificate_naive(f, sigma, fr, pr) && 4 * row_ops <= row_naive;

  // Column-skewed: shift (0, H, ..., H) keeps row 0 as the pivot of column 0,
  // so every other row picks up a long entry in column 0.
  PolyMatrix fc(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<FieldElem> g(static_cast<std::size_t>(sig[j]));
      for (auto& x : g) x = f.sample(rng, false);
      fc(i, j) = Poly(g);
    }
  }
  std::vector<std::int64_t> sh(m, kD + 1);
  sh[0] = 0;
  const auto ic = make_instance(f.modulus(), sigma, fc, Shift(sh));
  const auto pc = iterative_appbas(f, ic);
  const auto pc_t = truncate(pc, static_cast<std::size_t>(sigma.max()) + 1);
  std::int64_t rsum = 0;
  std::int64_t csum = 0;
  for (const Degree& d : row_degrees(pc_t)) rsum += d.clamped();
  for (const Degree& d : column_degrees(pc_t)) csum += d.clamped();
  f.reset_tally();
  const auto c_col = compute_certificate_coldeg(f, sigma, fc, pc_t);
  const std::uint64_t col_ops = f.tally().total();
  f.reset_tally();
  mul_naive(f, pc, fc);
  const std::uint64_t col_naive = f.tally().total();
  const bool col_ok = c_col == compute_certificate_naive(f, sigma, fc, pc) &&
                      choose_certificate_variant(pc_t) == CertificateVariant::coldeg && 4 * col_ops <= col_naive;

  return {row_ok && col_ok,
          "row-skewed (rdeg " + std::to_string(top_row) + " and <= " + std::to_string(other_rows) + "): " +
              std::to_string(row_ops) + " vs " + std::to_string(row_naive) + " naive (" +
              fmt("%.1fx", static_cast<double>(row_naive) / static_cast<double>(row_ops)) +
              "); column-skewed (sum rdeg " + std::to_string(rsum) + ", sum cdeg " + std::to_string(csum) + "): " +
              std::to_string(col_ops) + " vs " + std::to_string(col_naive) + " naive (" +
              fmt("%.1fx", static_cast<double>(col_naive) / static_cast<double>(col_ops)) + ")"};
}

Outcome criterion7() {
  SeededRng rng(777);
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::size_t literal_mismatches = 0;
  std::size_t column_mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t p = t % 2 == 0 ? 10007 : PrimeField::kMersenne61;
    const PrimeField f(p);
    const std::size_t m = 1 + rng.uniform_below(4);
    const std::size_t dmax = 1 + rng.uniform_below(32);
    const auto v = test::random_matrix(f, rng, 1, m, dmax);
    const FieldElem alpha = f.sample(rng, true);
    const std::uint64_t beta = oracle::invm(alpha.value(), p);
    const auto h = horner_truncated_evals(f, v, alpha, dmax);
    const auto rv = oracle::raw(v);
    for (std::size_t k = 0; k < dmax; ++k) {
      for (std::size_t l = 0; l < m; ++l) {
        // Truncate to degree k, reverse, evaluate at 1/alpha.
        oracle::Coeffs rev(k + 1, 0);
        for (std::size_t i = 0; i <= k; ++i) rev[i] = oracle::coeff(rv.at(0, l), k - i);
        oracle::trim(rev);
        oracle::Coeffs trunc(k + 1, 0);
        for (std::size_t i = 0; i <= k; ++i) trunc[i] = oracle::coeff(rv.at(0, l), i);
        oracle::trim(trunc);
        ++checked;
        if (h[k](0, l).value() != oracle::peval(rev, beta, p)) ++mismatches;
        if (h[k](0, l).value() != oracle::peval(trunc, beta, p)) ++literal_mismatches;
      }
    }
    // Column formula against the oracle product.
    const auto col = test::random_matrix(f, rng, m, 1, dmax);
    const auto prod = oracle::truncate_cols(oracle::product(rv, oracle::raw(col), p), {static_cast<std::int64_t>(dmax)});
    if (eval_truncated_column(f, h, col, dmax, alpha).value() != oracle::peval(prod.at(0, 0), alpha.value(), p)) {
      ++column_mismatches;
    }
  }
  return {mismatches == 0 && column_mismatches == 0,
          std::to_string(checked) + " h_k entries vs reversed truncation at 1/alpha: " + std::to_string(mismatches) +
              " mismatches; column formula: " + std::to_string(column_mismatches) +
              " mismatches (unreversed truncation at 1/alpha differs on " + std::to_string(literal_mismatches) + ")"};
}

Outcome criterion8() {
  const PrimeField f(PrimeField::kMersenne61);
  std::size_t calls = 0;
  std::size_t bad = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const std::size_t m = 1 + t % 10;
    const std::size_t n = 1 + (t / 10) % 4;
    const auto inst = gen_random_instance(f, m, n, SigmaProfile::uniform(3), ShiftProfile::zero(), t);
    const auto p = iterative_appbas(f, inst);
    auto c = compute_certificate(f, inst.sigma, inst.f, p);
    if (t % 3 == 0) c(0, 0) = f.add(c(0, 0), f.one());
    SeededRng rng(t + 40);
    const auto v = certify(f, inst, p, c, rng);
    ++calls;
    // Replay the draws on a fresh generator: alpha_det, alpha, u_1..u_m.
    SeededRng replay(t + 40);
    bool ok = v.transcript.draws == m + 2;
    ok = ok && f.sample_from(replay, f.modulus(), false) == v.transcript.alpha_det;
    ok = ok && f.sample_from(replay, f.modulus(), true) == v.transcript.product.alpha;
    for (std::size_t i = 0; i < m; ++i) ok = ok && f.sample_from(replay, f.modulus(), false) == v.transcript.product.u(0, i);
    ok = ok && replay.words_consumed() == rng.words_consumed();
    if (!ok) ++bad;
  }
  return {bad == 0 && calls == 100,
          std::to_string(calls) + " certify calls, m = 1..10: " + std::to_string(bad) + " transcripts off m + 2 draws"};
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(PMCERT_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion9() {
  std::size_t docs = 0;
  std::size_t failures = 0;
  SeededRng rng(909);
  for (std::uint64_t t = 0; t < 25; ++t) {
    const std::uint64_t mod = t % 2 == 0 ? 10007 : PrimeField::kMersenne61;
    const PrimeField f(mod);
    const std::size_t m = 1 + rng.uniform_below(4);
    const std::size_t n = rng.uniform_below(4);
    const auto inst = gen_random_instance(f, m, n, SigmaProfile::random_max(6), ShiftProfile::uniform_range(-4, 4), t);
    const auto p = iterative_appbas(f, inst);
    auto c = compute_certificate(f, inst.sigma, inst.f, p);

    const auto check = [&](const std::string& text, auto parse, auto serialize, const auto& value) {
      ++docs;
      const auto back = parse(text);
      if (!(back == value) || serialize(back) != text) ++failures;
    };
    check(serialize_instance(inst), parse_instance, serialize_instance, inst);
    const BasisDocument bd{mod, p};
    check(serialize_basis(bd), parse_basis, serialize_basis, bd);
    const CertificateDocument cd{mod, c};
    check(serialize_certificate(cd), parse_certificate, serialize_certificate, cd);

    VerdictDocument vd;
    vd.modulus = mod;
    vd.m = m;
    vd.n = n;
    vd.seed = rng.next_word();
    vd.sampling_set_size = mod;
    vd.accepted = true;
    if (n > 0 && t % 2 == 1) c(0, 0) = f.add(c(0, 0), f.one());
    for (std::uint64_t r = 0; r < 1 + t % 3; ++r) {
      SeededRng cr(vd.seed + r);
      CertifyOptions o;
      if (r == 1) o.mode = ChallengeMode::powers_of_zeta;
      const auto v = certify(f, inst, p, c, cr, o);
      vd.runs.push_back(run_record(v, vd.seed + r));
      vd.accepted = vd.accepted && v.accepted;
    }
    check(serialize_verdict(vd), parse_verdict, serialize_verdict, vd);
  }

  TempDir dir("c9");
  const std::string inst = dir.file("i.txt");
  const std::string basis = dir.file("b.txt");
  const std::string cert = dir.file("c.txt");
  const std::string triple = " --instance " + inst + " --basis " + basis + " --cert " + cert;
  const int gen = run_tool("gen --m 3 --n 2 --sigma uniform:5 --seed 9 --out " + inst);
  const int prove = run_tool("prove --instance " + inst + " --basis-out " + basis + " --cert-out " + cert);
  const int honest = run_tool("verify" + triple + " --seed 1 --repeat 3");
  const int tamper = run_tool("tamper" + triple + " --target basis_coeff --preserve-cheap-checks --seed 2" +
                              " --basis-out " + dir.file("tb.txt") + " --cert-out " + dir.file("tc.txt"));
  const int tampered = run_tool("verify --instance " + inst + " --basis " + dir.file("tb.txt") + " --cert " +
                                dir.file("tc.txt") + " --seed 1 --repeat 5");
  const int missing = run_tool("verify --instance " + dir.file("absent.txt") + " --basis " + basis + " --cert " + cert);
  const int bad_args = run_tool("verify --instance " + inst);
  const int small_set = run_tool("verify" + triple + " --seed 1 --s-size 10");
  // D = 30 over F_11 is below the 2(D + 1) + 1 requirement.
  const std::string small_inst = dir.file("small.txt");
  run_tool("gen --m 2 --n 2 --sigma uniform:15 --p 11 --seed 1 --out " + small_inst);
  run_tool("prove --instance " + small_inst + " --basis-out " + dir.file("sb.txt") + " --cert-out " +
           dir.file("sc.txt"));
  const int small_field = run_tool("verify --instance " + small_inst + " --basis " + dir.file("sb.txt") + " --cert " +
                                   dir.file("sc.txt") + " --seed 1");

  const bool cli_ok = gen == 0 && prove == 0 && honest == 0 && tamper == 0 && tampered == 1 && missing == 2 &&
                      bad_args == 2 && small_set == 3 && small_field == 3;
  std::ostringstream codes;
  codes << "honest " << honest << ", tampered " << tampered << ", missing file " << missing << ", bad args "
        << bad_args << ", small set " << small_set << ", small field " << small_field;
  return {docs >= 100 && failures == 0 && cli_ok,
          std::to_string(docs) + " documents, " + std::to_string(failures) + " round-trip failures; exit codes: " +
              codes.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, 10, criterion1}, {2, 30, criterion2}, {3, 60, criterion3}, {4, 120, criterion4}, {5, 60, criterion5},
      {6, 60, criterion6}, {7, 5, criterion7},  {8, 60, criterion8}, {9, 60, criterion9},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("criterion %d: %s  %s [%.2fs, limit %.0fs]\n", c.id, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
