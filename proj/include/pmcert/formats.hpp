#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmcert/certifier.hpp"
#include "pmcert/field.hpp"
#include "pmcert/instance.hpp"
#include "pmcert/poly_matrix.hpp"

namespace pmcert {

// Line-oriented text documents. Every document starts with
//
//   pmcert v1
//   role <instance|basis|certificate|verdict>
//   field <p>
//   dims <m> <n>
//
// and ends with a line "end". Instances add "order s_1 .. s_n" and
// "shift s_1 .. s_m". Matrix entries follow as "<row> <col> <deg> c_0 .. c_deg"
// (0-based indices, row-major, zero entries omitted, c_deg != 0). Numbers are
// plain decimal without sign or leading zeros (shift entries may be
// negative). Lines end with '\n'; no other whitespace is accepted.

enum class DocumentRole { instance, basis, certificate, verdict };

std::string_view to_string(DocumentRole r);

struct DocumentHeader {
  DocumentRole role = DocumentRole::instance;
  std::uint64_t modulus = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

// Reads the header only.
DocumentHeader parse_header(std::string_view text);

struct BasisDocument {
  std::uint64_t modulus = 0;
  PolyMatrix basis;
  friend bool operator==(const BasisDocument&, const BasisDocument&) = default;
};

struct CertificateDocument {
  std::uint64_t modulus = 0;
  ConstMatrix certificate;
  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

// One certify() run as recorded in a verdict file.
struct RunRecord {
  std::uint64_t seed = 0;
  bool accepted = false;
  std::optional<FailedCondition> failed;
  std::optional<std::int64_t> delta;
  ChallengeMode mode = ChallengeMode::independent;
  FieldElem alpha_det;
  FieldElem alpha_prod;
  std::optional<FieldElem> zeta;
  std::uint64_t draws = 0;
  std::vector<FieldElem> u;
  OpTally ops;
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct VerdictDocument {
  std::uint64_t modulus = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t sampling_set_size = 0;
  std::vector<RunRecord> runs;
  bool accepted = false;  // all runs accepted
  friend bool operator==(const VerdictDocument&, const VerdictDocument&) = default;
};

RunRecord run_record(const Verdict& v, std::uint64_t run_seed);

std::string serialize_instance(const Instance& inst);
std::string serialize_basis(const BasisDocument& doc);
std::string serialize_certificate(const CertificateDocument& doc);
std::string serialize_verdict(const VerdictDocument& doc);

// Parsers raise ParseError (with 1-based line and column; a document cut
// short reports the last complete line), NonCanonicalResidue for values
// >= p, and DimensionMismatch when the header and body disagree.
Instance parse_instance(std::string_view text);
BasisDocument parse_basis(std::string_view text);
CertificateDocument parse_certificate(std::string_view text);
VerdictDocument parse_verdict(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace pmcert
