#include "pmcert/prover.hpp"

#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "pmcert/exact_checks.hpp"

namespace pmcert {

namespace {

// (P_{i,*} . F_{*,j}) rem x^len, densely stored.
std::vector<FieldElem> residual_row(const PrimeField& f, const PolyMatrix& p, const PolyMatrix& fmat,
                                    std::size_t i, std::size_t j, std::size_t len) {
  std::vector<FieldElem> out(len);
  for (std::size_t l = 0; l < p.cols(); ++l) {
    const auto a = p(i, l).coeffs();
    const auto b = fmat(l, j).coeffs();
    for (std::size_t x = 0; x < a.size() && x < len; ++x) {
      if (a[x].is_zero()) continue;
      for (std::size_t y = 0; y < b.size() && x + y < len; ++y) {
        out[x + y] = f.mul_add(out[x + y], a[x], b[y]);
      }
    }
  }
  return out;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw InvalidArgument("bad integer '" + std::string(text) + "' in " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split_colon(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

FieldElem nonzero_or_draw(const PrimeField& f, SeededRng& rng, std::optional<FieldElem> v) {
  if (v) {
    if (v->is_zero()) throw InvalidArgument("tamper value must be nonzero");
    return *v;
  }
  return f.sample(rng, true);
}

std::size_t pick(SeededRng& rng, std::optional<std::size_t> fixed, std::size_t bound) {
  return fixed ? *fixed : static_cast<std::size_t>(rng.uniform_below(bound));
}

struct Location {
  std::size_t row;
  std::size_t col;
  std::int64_t top;  // admissible degrees are 1..top
};

// Entries whose coefficients of degree 1..top sit strictly below the
// s-leading position and within the order window.
std::vector<Location> interior_locations(const PolyMatrix& p, const Instance& inst) {
  std::vector<Location> out;
  const auto r = shifted_row_degree(p, inst.shift);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (r[i].is_neg_inf()) continue;
    for (std::size_t l = 0; l < p.cols(); ++l) {
      std::int64_t top = r[i].value() - inst.shift[l] - 1;
      if (inst.n() > 0 && top > inst.sigma.max()) top = inst.sigma.max();
      if (top >= 1) out.push_back({i, l, top});
    }
  }
  return out;
}

// Applies one mutation; false when the drawn location is unusable.
bool apply_once(const PrimeField& f, const Instance& inst, const TamperSpec& spec, SeededRng& rng,
                TamperResult& r) {
  const std::size_t m = r.basis.rows();
  switch (spec.target) {
    case TamperTarget::basis_coeff: {
      std::size_t i = 0;
      std::size_t l = 0;
      std::size_t k = 0;
      if (spec.preserve_cheap_checks) {
        const auto locs = interior_locations(r.basis, inst);
        if (spec.row && spec.col) {
          i = *spec.row;
          l = *spec.col;
          const Location* hit = nullptr;
          for (const auto& loc : locs) {
            if (loc.row == i && loc.col == l) hit = &loc;
          }
          if (hit == nullptr) return false;
          k = spec.degree ? *spec.degree : 1 + rng.uniform_below(static_cast<std::uint64_t>(hit->top));
          if (k < 1 || static_cast<std::int64_t>(k) > hit->top) return false;
        } else {
          if (locs.empty()) throw NoValidLocation("no coefficient strictly inside the s-leading frontier");
          const auto& loc = locs[rng.uniform_below(locs.size())];
          i = loc.row;
          l = loc.col;
          k = 1 + rng.uniform_below(static_cast<std::uint64_t>(loc.top));
        }
      } else {
        i = pick(rng, spec.row, m);
        l = pick(rng, spec.col, m);
        if (i >= m || l >= m) return false;
        const std::int64_t top = r.basis.degree().is_neg_inf() ? 0 : r.basis.degree().value();
        k = pick(rng, spec.degree, static_cast<std::size_t>(top) + 1);
      }
      const FieldElem delta = nonzero_or_draw(f, rng, spec.value);
      Poly& entry = r.basis(i, l);
      entry.set_coeff(k, f.add(entry.coeff(k), delta));
      return true;
    }
    case TamperTarget::certificate_entry: {
      if (r.certificate.cols() == 0) throw NoValidLocation("certificate has no columns");
      const std::size_t i = pick(rng, spec.row, m);
      const std::size_t j = pick(rng, spec.col, r.certificate.cols());
      if (i >= m || j >= r.certificate.cols()) return false;
      r.certificate(i, j) = f.add(r.certificate(i, j), nonzero_or_draw(f, rng, spec.value));
      return true;
    }
    case TamperTarget::swap_rows: {
      if (m < 2) throw NoValidLocation("swap_rows needs two rows");
      const std::size_t a = pick(rng, spec.row, m);
      const std::size_t b = pick(rng, spec.other_row, m);
      if (a >= m || b >= m || a == b) return false;
      for (std::size_t l = 0; l < m; ++l) std::swap(r.basis(a, l), r.basis(b, l));
      return true;
    }
    case TamperTarget::scale_row: {
      const std::size_t i = pick(rng, spec.row, m);
      if (i >= m) return false;
      const FieldElem factor = spec.value ? *spec.value : f.sample(rng, false);
      for (std::size_t l = 0; l < m; ++l) r.basis(i, l) = poly_scale(f, r.basis(i, l), factor);
      return true;
    }
  }
  return false;
}

bool location_fixed(const TamperSpec& spec) {
  switch (spec.target) {
    case TamperTarget::basis_coeff:
      return spec.row && spec.col && spec.degree && spec.value;
    case TamperTarget::certificate_entry:
      return spec.row && spec.col && spec.value;
    case TamperTarget::swap_rows:
      return spec.row && spec.other_row;
    case TamperTarget::scale_row:
      return spec.row && spec.value;
  }
  return false;
}

}  // namespace

PolyMatrix iterative_appbas(const PrimeField& f, const Instance& inst) {
  inst.validate();
  if (inst.modulus != f.modulus()) throw ModulusMismatch("instance modulus differs from the field");
  const std::size_t m = inst.m();
  PolyMatrix p = PolyMatrix::identity(m);
  std::vector<std::int64_t> t(inst.shift.entries().begin(), inst.shift.entries().end());

  for (std::size_t j = 0; j < inst.n(); ++j) {
    const auto len = static_cast<std::size_t>(inst.sigma[j]);
    std::vector<std::vector<FieldElem>> res(m);
    for (std::size_t i = 0; i < m; ++i) res[i] = residual_row(f, p, inst.f, i, j, len);

    for (std::size_t k = 0; k < len; ++k) {
      std::optional<std::size_t> piv;
      for (std::size_t i = 0; i < m; ++i) {
        if (!res[i][k].is_zero() && (!piv || t[i] < t[*piv])) piv = i;
      }
      if (!piv) continue;
      const std::size_t pi = *piv;
      const FieldElem inv_lead = f.inv(res[pi][k]);
      for (std::size_t i = 0; i < m; ++i) {
        if (i == pi || res[i][k].is_zero()) continue;
        const FieldElem c = f.mul(res[i][k], inv_lead);
        for (std::size_t l = 0; l < m; ++l) {
          if (p(pi, l).is_zero()) continue;
          p(i, l) = poly_sub(f, p(i, l), poly_scale(f, p(pi, l), c));
        }
        for (std::size_t q = k; q < len; ++q) {
          if (!res[pi][q].is_zero()) res[i][q] = f.sub(res[i][q], f.mul(c, res[pi][q]));
        }
      }
      for (std::size_t l = 0; l < m; ++l) p(pi, l) = poly_shift(p(pi, l), 1);
      for (std::size_t q = len; q-- > 1;) res[pi][q] = res[pi][q - 1];
      res[pi][0] = FieldElem{};
      ++t[pi];
    }
  }
  return p;
}

SigmaProfile parse_sigma_profile(std::string_view text) {
  const auto parts = split_colon(text);
  if (parts.size() == 2) {
    const std::int64_t v = parse_int(parts[1], "order profile");
    if (v < 1) throw InvalidArgument("order profile parameter must be positive");
    if (parts[0] == "uniform") return SigmaProfile::uniform(v);
    if (parts[0] == "random_max") return SigmaProfile::random_max(v);
    if (parts[0] == "skewed") return SigmaProfile::skewed(v);
  }
  throw InvalidArgument("unknown order profile '" + std::string(text) +
                        "' (expected uniform:N, random_max:N or skewed:D)");
}

ShiftProfile parse_shift_profile(std::string_view text) {
  const auto parts = split_colon(text);
  if (parts.size() == 1 && parts[0] == "zero") return ShiftProfile::zero();
  if (parts.size() == 3 && parts[0] == "range") {
    const std::int64_t lo = parse_int(parts[1], "shift profile");
    const std::int64_t hi = parse_int(parts[2], "shift profile");
    if (lo > hi) throw InvalidArgument("shift range is empty");
    return ShiftProfile::uniform_range(lo, hi);
  }
  if (parts.size() == 2 && parts[0] == "staircase") {
    return ShiftProfile::staircase(parse_int(parts[1], "shift profile"));
  }
  throw InvalidArgument("unknown shift profile '" + std::string(text) +
                        "' (expected zero, range:A:B or staircase:H)");
}

std::string to_string(const SigmaProfile& p) {
  switch (p.kind) {
    case SigmaProfile::Kind::uniform:
      return "uniform:" + std::to_string(p.param);
    case SigmaProfile::Kind::random_max:
      return "random_max:" + std::to_string(p.param);
    case SigmaProfile::Kind::skewed:
      return "skewed:" + std::to_string(p.param);
  }
  return "?";
}

std::string to_string(const ShiftProfile& p) {
  switch (p.kind) {
    case ShiftProfile::Kind::zero:
      return "zero";
    case ShiftProfile::Kind::uniform_range:
      return "range:" + std::to_string(p.a) + ":" + std::to_string(p.b);
    case ShiftProfile::Kind::staircase:
      return "staircase:" + std::to_string(p.a);
  }
  return "?";
}

Instance gen_random_instance(const PrimeField& f, std::size_t m, std::size_t n, const SigmaProfile& sigma,
                             const ShiftProfile& shift, std::uint64_t seed) {
  if (m == 0) throw InvalidArgument("instances need m >= 1");
  if (sigma.param < 1) throw InvalidArgument("order profile parameter must be positive");
  SeededRng rng(seed);

  std::vector<std::int64_t> sig(n);
  for (std::size_t j = 0; j < n; ++j) {
    switch (sigma.kind) {
      case SigmaProfile::Kind::uniform:
        sig[j] = sigma.param;
        break;
      case SigmaProfile::Kind::random_max:
        sig[j] = 1 + static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(sigma.param)));
        break;
      case SigmaProfile::Kind::skewed:
        if (sigma.param < static_cast<std::int64_t>(n)) throw InvalidArgument("skewed profile needs D >= n");
        sig[j] = j == 0 ? sigma.param - static_cast<std::int64_t>(n) + 1 : 1;
        break;
    }
  }

  std::vector<std::int64_t> s(m);
  for (std::size_t i = 0; i < m; ++i) {
    switch (shift.kind) {
      case ShiftProfile::Kind::zero:
        s[i] = 0;
        break;
      case ShiftProfile::Kind::uniform_range:
        if (shift.a > shift.b) throw InvalidArgument("shift range is empty");
        s[i] = shift.a + static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(shift.b - shift.a) + 1));
        break;
      case ShiftProfile::Kind::staircase:
        s[i] = static_cast<std::int64_t>(i) * shift.a;
        break;
    }
  }

  Instance inst;
  inst.modulus = f.modulus();
  inst.sigma = Order(std::move(sig));
  inst.shift = Shift(std::move(s));
  inst.f = PolyMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<FieldElem> c(static_cast<std::size_t>(inst.sigma[j]));
      for (auto& x : c) x = f.sample(rng, false);
      inst.f(i, j) = Poly(std::move(c));
    }
  }
  return inst;
}

std::string_view to_string(TamperTarget t) {
  switch (t) {
    case TamperTarget::basis_coeff:
      return "basis_coeff";
    case TamperTarget::certificate_entry:
      return "certificate_entry";
    case TamperTarget::swap_rows:
      return "swap_rows";
    case TamperTarget::scale_row:
      return "scale_row";
  }
  return "unknown";
}

std::optional<TamperTarget> tamper_target_from_string(std::string_view s) {
  for (auto t : {TamperTarget::basis_coeff, TamperTarget::certificate_entry, TamperTarget::swap_rows,
                 TamperTarget::scale_row}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

TamperResult tamper(const PrimeField& f, const Instance& inst, const PolyMatrix& p, const ConstMatrix& c,
                    const TamperSpec& spec, SeededRng& rng) {
  inst.validate();
  const std::size_t m = inst.m();
  if (p.rows() != m || p.cols() != m || c.rows() != m || c.cols() != inst.n()) {
    throw DimensionMismatch("tamper: P must be m x m and C m x n");
  }
  const bool fixed = location_fixed(spec);
  const int attempts = fixed ? 1 : 256;
  for (int a = 0; a < attempts; ++a) {
    TamperResult r{p, c, std::nullopt};
    if (!apply_once(f, inst, spec, rng, r)) {
      if (fixed) throw NoValidLocation("requested location is not admissible");
      continue;
    }
    if (r.basis == p && r.certificate == c) {
      if (fixed) throw NoValidLocation("requested mutation leaves the input unchanged");
      continue;
    }
    r.tag = exact_conditions(f, inst, r.basis, r.certificate).first_failure();
    if (fixed || r.tag) return r;
  }
  throw NoValidLocation("no mutation of this kind violates a condition");
}

}  // namespace pmcert
