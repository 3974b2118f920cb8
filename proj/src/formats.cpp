#include "pmcert/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

namespace pmcert {

namespace {

constexpr std::string_view kMagic = "pmcert v1";

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;

  std::string_view keyword() const { return tokens.empty() ? std::string_view{} : tokens[0].text; }
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      const std::size_t nl = text.find('\n', start);
      if (nl == std::string_view::npos) {
        partial_ = true;
        break;
      }
      lines_.push_back(text.substr(start, nl - start));
      start = nl + 1;
    }
  }

  bool at_end() const { return next_ == lines_.size(); }

  Line next() {
    if (at_end()) {
      throw ParseError(lines_.size(), 0,
                       partial_ ? "document truncated inside a line" : "unexpected end of document");
    }
    const std::size_t number = next_ + 1;
    const std::string_view raw = lines_[next_++];
    Line line;
    line.number = number;
    if (raw.empty()) throw ParseError(number, 1, "empty line");
    std::size_t pos = 0;
    while (true) {
      const std::size_t sp = raw.find(' ', pos);
      const std::string_view tok = raw.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
      if (tok.empty()) throw ParseError(number, pos + 1, "unexpected space");
      for (std::size_t c = 0; c < tok.size(); ++c) {
        const char ch = tok[c];
        if (ch < 0x21 || ch > 0x7e) throw ParseError(number, pos + c + 1, "unexpected character");
      }
      line.tokens.push_back({tok, pos + 1});
      if (sp == std::string_view::npos) break;
      pos = sp + 1;
    }
    return line;
  }

  // Expects "end" and nothing after it.
  void finish() {
    const Line line = next();
    if (line.tokens.size() != 1 || line.keyword() != "end") {
      throw ParseError(line.number, 1, "expected 'end'");
    }
    if (!at_end() || partial_) throw ParseError(line.number + 1, 1, "content after 'end'");
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
  bool partial_ = false;
};

std::uint64_t parse_u64(const Line& line, std::size_t idx) {
  if (idx >= line.tokens.size()) throw ParseError(line.number, 0, "missing field");
  const Token& t = line.tokens[idx];
  if (t.text.size() > 1 && t.text[0] == '0') throw ParseError(line.number, t.column, "leading zero");
  std::uint64_t v = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line.number, t.column, "expected an unsigned integer, got '" + std::string(t.text) + "'");
  }
  return v;
}

std::int64_t parse_i64(const Line& line, std::size_t idx) {
  if (idx >= line.tokens.size()) throw ParseError(line.number, 0, "missing field");
  const Token& t = line.tokens[idx];
  const std::string_view digits = !t.text.empty() && t.text[0] == '-' ? t.text.substr(1) : t.text;
  if ((digits.size() > 1 && digits[0] == '0') || t.text == "-0") {
    throw ParseError(line.number, t.column, "non-canonical integer");
  }
  std::int64_t v = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line.number, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  }
  return v;
}

FieldElem parse_residue(const Line& line, std::size_t idx, std::uint64_t p) {
  const std::uint64_t v = parse_u64(line, idx);
  if (v >= p) {
    throw NonCanonicalResidue(line.number, line.tokens[idx].column,
                              "residue " + std::to_string(v) + " is not below p = " + std::to_string(p));
  }
  return FieldElem::from_canonical(v);
}

bool parse_flag(const Line& line, std::size_t idx) {
  const std::uint64_t v = parse_u64(line, idx);
  if (v > 1) throw ParseError(line.number, line.tokens[idx].column, "expected 0 or 1");
  return v == 1;
}

// "-" or a value.
bool is_dash(const Line& line, std::size_t idx) {
  if (idx >= line.tokens.size()) throw ParseError(line.number, 0, "missing field");
  return line.tokens[idx].text == "-";
}

void expect_arity(const Line& line, std::string_view keyword, std::size_t values) {
  if (line.keyword() != keyword) {
    throw ParseError(line.number, 1, "expected '" + std::string(keyword) + "'");
  }
  if (line.tokens.size() != values + 1) {
    throw ParseError(line.number, 0,
                     "'" + std::string(keyword) + "' takes " + std::to_string(values) + " values, got " +
                         std::to_string(line.tokens.size() - 1));
  }
}

void expect_word(const Line& line, std::size_t idx, std::string_view word) {
  if (idx >= line.tokens.size() || line.tokens[idx].text != word) {
    throw ParseError(line.number, idx < line.tokens.size() ? line.tokens[idx].column : 0,
                     "expected '" + std::string(word) + "'");
  }
}

DocumentRole parse_role(const Line& line) {
  expect_arity(line, "role", 1);
  const auto r = line.tokens[1].text;
  for (auto role : {DocumentRole::instance, DocumentRole::basis, DocumentRole::certificate, DocumentRole::verdict}) {
    if (to_string(role) == r) return role;
  }
  throw ParseError(line.number, line.tokens[1].column, "unknown role '" + std::string(r) + "'");
}

DocumentHeader read_header(Reader& in) {
  const Line magic = in.next();
  if (magic.tokens.size() != 2 || magic.tokens[0].text != "pmcert" || magic.tokens[1].text != "v1") {
    throw ParseError(magic.number, 1, "expected '" + std::string(kMagic) + "'");
  }
  DocumentHeader h;
  h.role = parse_role(in.next());
  const Line field = in.next();
  expect_arity(field, "field", 1);
  h.modulus = parse_u64(field, 1);
  if (h.modulus <= 2 || h.modulus >= PrimeField::kMaxModulus || !is_prime_u64(h.modulus)) {
    throw ParseError(field.number, field.tokens[1].column, "modulus must be a prime in (2, 2^62)");
  }
  const Line dims = in.next();
  expect_arity(dims, "dims", 2);
  h.rows = parse_u64(dims, 1);
  h.cols = parse_u64(dims, 2);
  return h;
}

DocumentHeader read_header_as(Reader& in, DocumentRole role) {
  DocumentHeader h = read_header(in);
  if (h.role != role) {
    throw ParseError(2, 6, "expected role '" + std::string(to_string(role)) + "', got '" +
                               std::string(to_string(h.role)) + "'");
  }
  return h;
}

// Matrix entries until the "end" line. Returns with the reader past "end".
template <class Store>
void read_entries(Reader& in, const DocumentHeader& h, bool constant, Store store) {
  std::optional<std::pair<std::size_t, std::size_t>> prev;
  while (true) {
    const Line line = in.next();
    if (line.keyword() == "end") {
      if (line.tokens.size() != 1) throw ParseError(line.number, 0, "'end' takes no values");
      if (!in.at_end()) throw ParseError(line.number + 1, 1, "content after 'end'");
      return;
    }
    if (line.tokens.size() < 4) throw ParseError(line.number, 0, "entry needs row, col, deg and coefficients");
    const std::uint64_t i = parse_u64(line, 0);
    const std::uint64_t j = parse_u64(line, 1);
    const std::uint64_t deg = parse_u64(line, 2);
    if (i >= h.rows || j >= h.cols) {
      throw DimensionMismatch("line " + std::to_string(line.number) + ": entry (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") outside " + std::to_string(h.rows) + " x " +
                              std::to_string(h.cols));
    }
    const std::pair<std::size_t, std::size_t> pos{i, j};
    if (prev && !(*prev < pos)) throw ParseError(line.number, 1, "entries must be in increasing row-major order");
    prev = pos;
    if (constant && deg != 0) throw ParseError(line.number, line.tokens[2].column, "constant entries have degree 0");
    if (line.tokens.size() - 3 != deg + 1) {
      throw ParseError(line.number, 0, "degree " + std::to_string(deg) + " needs " + std::to_string(deg + 1) +
                                           " coefficients, got " + std::to_string(line.tokens.size() - 3));
    }
    std::vector<FieldElem> c(deg + 1);
    for (std::size_t k = 0; k <= deg; ++k) c[k] = parse_residue(line, 3 + k, h.modulus);
    if (c.back().is_zero()) {
      throw ParseError(line.number, line.tokens.back().column, "leading coefficient must be nonzero");
    }
    store(line, i, j, std::move(c));
  }
}

void write_header(std::ostringstream& out, DocumentRole role, std::uint64_t p, std::size_t rows, std::size_t cols) {
  out << kMagic << '\n'
      << "role " << to_string(role) << '\n'
      << "field " << p << '\n'
      << "dims " << rows << ' ' << cols << '\n';
}

void write_entries(std::ostringstream& out, const PolyMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Poly& e = a(i, j);
      if (e.is_zero()) continue;
      out << i << ' ' << j << ' ' << e.length() - 1;
      for (FieldElem c : e.coeffs()) out << ' ' << c.value();
      out << '\n';
    }
  }
}

std::string_view mode_name(ChallengeMode m) {
  return m == ChallengeMode::independent ? "independent" : "powers_of_zeta";
}

}  // namespace

std::string_view to_string(DocumentRole r) {
  switch (r) {
    case DocumentRole::instance:
      return "instance";
    case DocumentRole::basis:
      return "basis";
    case DocumentRole::certificate:
      return "certificate";
    case DocumentRole::verdict:
      return "verdict";
  }
  return "unknown";
}

DocumentHeader parse_header(std::string_view text) {
  Reader in(text);
  return read_header(in);
}

RunRecord run_record(const Verdict& v, std::uint64_t run_seed) {
  RunRecord r;
  r.seed = run_seed;
  r.accepted = v.accepted;
  r.failed = v.failed_condition;
  r.delta = v.delta;
  r.mode = v.transcript.product.mode;
  r.alpha_det = v.transcript.alpha_det;
  r.alpha_prod = v.transcript.product.alpha;
  r.zeta = v.transcript.product.zeta;
  r.draws = v.transcript.draws;
  const auto row = v.transcript.product.u.row(0);
  r.u.assign(row.begin(), row.end());
  r.ops = v.ops;
  return r;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  write_header(out, DocumentRole::instance, inst.modulus, inst.m(), inst.n());
  out << "order";
  for (std::int64_t s : inst.sigma.entries()) out << ' ' << s;
  out << "\nshift";
  for (std::int64_t s : inst.shift.entries()) out << ' ' << s;
  out << '\n';
  write_entries(out, inst.f);
  out << "end\n";
  return out.str();
}

std::string serialize_basis(const BasisDocument& doc) {
  std::ostringstream out;
  write_header(out, DocumentRole::basis, doc.modulus, doc.basis.rows(), doc.basis.cols());
  write_entries(out, doc.basis);
  out << "end\n";
  return out.str();
}

std::string serialize_certificate(const CertificateDocument& doc) {
  std::ostringstream out;
  write_header(out, DocumentRole::certificate, doc.modulus, doc.certificate.rows(), doc.certificate.cols());
  write_entries(out, to_poly_matrix(doc.certificate));
  out << "end\n";
  return out.str();
}

std::string serialize_verdict(const VerdictDocument& doc) {
  std::ostringstream out;
  write_header(out, DocumentRole::verdict, doc.modulus, doc.m, doc.n);
  out << "seed " << doc.seed << '\n'
      << "s_size " << doc.sampling_set_size << '\n'
      << "runs " << doc.runs.size() << '\n';
  for (std::size_t r = 0; r < doc.runs.size(); ++r) {
    const RunRecord& run = doc.runs[r];
    out << "run " << r << " seed " << run.seed << " accepted " << (run.accepted ? 1 : 0) << " failed "
        << (run.failed ? to_string(*run.failed) : "-") << " delta ";
    if (run.delta) {
      out << *run.delta;
    } else {
      out << '-';
    }
    out << '\n'
        << "challenge " << r << ' ' << mode_name(run.mode) << " alpha_det " << run.alpha_det.value()
        << " alpha_prod " << run.alpha_prod.value() << " zeta ";
    if (run.zeta) {
      out << run.zeta->value();
    } else {
      out << '-';
    }
    out << " draws " << run.draws << '\n' << "u " << r;
    for (FieldElem x : run.u) out << ' ' << x.value();
    out << '\n'
        << "ops " << r << ' ' << run.ops.add_like << ' ' << run.ops.mul << ' ' << run.ops.inv << '\n';
  }
  out << "accepted " << (doc.accepted ? 1 : 0) << '\n' << "end\n";
  return out.str();
}

Instance parse_instance(std::string_view text) {
  Reader in(text);
  const DocumentHeader h = read_header_as(in, DocumentRole::instance);
  if (h.rows == 0) throw DimensionMismatch("an instance needs m >= 1");
  Instance inst;
  inst.modulus = h.modulus;

  const Line order = in.next();
  expect_arity(order, "order", h.cols);
  std::vector<std::int64_t> sigma(h.cols);
  for (std::size_t j = 0; j < h.cols; ++j) {
    const std::uint64_t v = parse_u64(order, j + 1);
    if (v == 0 || v > (std::uint64_t{1} << 40)) {
      throw ParseError(order.number, order.tokens[j + 1].column, "order entries must be positive");
    }
    sigma[j] = static_cast<std::int64_t>(v);
  }
  inst.sigma = Order(std::move(sigma));

  const Line shift = in.next();
  expect_arity(shift, "shift", h.rows);
  std::vector<std::int64_t> s(h.rows);
  for (std::size_t i = 0; i < h.rows; ++i) s[i] = parse_i64(shift, i + 1);
  inst.shift = Shift(std::move(s));

  inst.f = PolyMatrix(h.rows, h.cols);
  read_entries(in, h, false, [&](const Line& line, std::size_t i, std::size_t j, std::vector<FieldElem> c) {
    if (static_cast<std::int64_t>(c.size()) > inst.sigma[j]) {
      throw ParseError(line.number, line.tokens[2].column,
                       "degree must stay below sigma_" + std::to_string(j) + " = " + std::to_string(inst.sigma[j]));
    }
    inst.f(i, j) = Poly(std::move(c));
  });
  return inst;
}

BasisDocument parse_basis(std::string_view text) {
  Reader in(text);
  const DocumentHeader h = read_header_as(in, DocumentRole::basis);
  if (h.rows != h.cols) throw DimensionMismatch("a basis must be square");
  BasisDocument doc;
  doc.modulus = h.modulus;
  doc.basis = PolyMatrix(h.rows, h.cols);
  read_entries(in, h, false, [&](const Line&, std::size_t i, std::size_t j, std::vector<FieldElem> c) {
    doc.basis(i, j) = Poly(std::move(c));
  });
  return doc;
}

CertificateDocument parse_certificate(std::string_view text) {
  Reader in(text);
  const DocumentHeader h = read_header_as(in, DocumentRole::certificate);
  CertificateDocument doc;
  doc.modulus = h.modulus;
  doc.certificate = ConstMatrix(h.rows, h.cols);
  read_entries(in, h, true, [&](const Line&, std::size_t i, std::size_t j, std::vector<FieldElem> c) {
    doc.certificate(i, j) = c[0];
  });
  return doc;
}

VerdictDocument parse_verdict(std::string_view text) {
  Reader in(text);
  const DocumentHeader h = read_header_as(in, DocumentRole::verdict);
  VerdictDocument doc;
  doc.modulus = h.modulus;
  doc.m = h.rows;
  doc.n = h.cols;

  Line line = in.next();
  expect_arity(line, "seed", 1);
  doc.seed = parse_u64(line, 1);
  line = in.next();
  expect_arity(line, "s_size", 1);
  doc.sampling_set_size = parse_u64(line, 1);
  line = in.next();
  expect_arity(line, "runs", 1);
  const std::uint64_t runs = parse_u64(line, 1);
  if (runs > (std::uint64_t{1} << 24)) throw ParseError(line.number, line.tokens[1].column, "too many runs");

  for (std::uint64_t r = 0; r < runs; ++r) {
    RunRecord run;
    line = in.next();
    expect_arity(line, "run", 9);
    if (parse_u64(line, 1) != r) throw ParseError(line.number, line.tokens[1].column, "runs out of sequence");
    expect_word(line, 2, "seed");
    run.seed = parse_u64(line, 3);
    expect_word(line, 4, "accepted");
    run.accepted = parse_flag(line, 5);
    expect_word(line, 6, "failed");
    if (!is_dash(line, 7)) {
      run.failed = failed_condition_from_string(line.tokens[7].text);
      if (!run.failed) throw ParseError(line.number, line.tokens[7].column, "unknown condition tag");
    }
    if (run.accepted == run.failed.has_value()) {
      throw ParseError(line.number, line.tokens[5].column, "accepted runs have no failed condition and vice versa");
    }
    expect_word(line, 8, "delta");
    if (!is_dash(line, 9)) run.delta = parse_i64(line, 9);

    line = in.next();
    expect_arity(line, "challenge", 10);
    if (parse_u64(line, 1) != r) throw ParseError(line.number, line.tokens[1].column, "runs out of sequence");
    const auto mode = line.tokens[2].text;
    if (mode == "independent") {
      run.mode = ChallengeMode::independent;
    } else if (mode == "powers_of_zeta") {
      run.mode = ChallengeMode::powers_of_zeta;
    } else {
      throw ParseError(line.number, line.tokens[2].column, "unknown challenge mode");
    }
    expect_word(line, 3, "alpha_det");
    run.alpha_det = parse_residue(line, 4, h.modulus);
    expect_word(line, 5, "alpha_prod");
    run.alpha_prod = parse_residue(line, 6, h.modulus);
    expect_word(line, 7, "zeta");
    if (!is_dash(line, 8)) run.zeta = parse_residue(line, 8, h.modulus);
    expect_word(line, 9, "draws");
    run.draws = parse_u64(line, 10);

    line = in.next();
    expect_arity(line, "u", h.rows + 1);
    if (parse_u64(line, 1) != r) throw ParseError(line.number, line.tokens[1].column, "runs out of sequence");
    for (std::size_t i = 0; i < h.rows; ++i) run.u.push_back(parse_residue(line, i + 2, h.modulus));

    line = in.next();
    expect_arity(line, "ops", 4);
    if (parse_u64(line, 1) != r) throw ParseError(line.number, line.tokens[1].column, "runs out of sequence");
    run.ops = {parse_u64(line, 2), parse_u64(line, 3), parse_u64(line, 4)};
    doc.runs.push_back(std::move(run));
  }

  line = in.next();
  expect_arity(line, "accepted", 1);
  doc.accepted = parse_flag(line, 1);
  in.finish();
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("error while writing '" + path + "'");
}

}  // namespace pmcert
