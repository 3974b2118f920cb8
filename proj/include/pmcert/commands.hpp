#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pmcert/field.hpp"

namespace pmcert {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitAccept = 0,
  kExitReject = 1,
  kExitUsage = 2,  // bad arguments, unreadable or malformed files
  kExitFieldTooSmall = 3,
};

struct GenOptions {
  std::size_t m = 2;
  std::size_t n = 1;
  std::string sigma = "uniform:4";
  std::string shift = "zero";
  std::uint64_t modulus = PrimeField::kMersenne61;
  std::uint64_t seed = 0;
  std::string out;
};

struct ProveOptions {
  std::string instance;
  std::string basis_out;
  std::string cert_out;
  bool count_ops = false;
};

struct VerifyOptions {
  std::string instance;
  std::string basis;
  std::string cert;
  std::optional<std::uint64_t> seed;  // falls back to APPBASCERT_SEED, then a random seed
  std::optional<std::uint64_t> s_size;
  bool zeta = false;
  std::uint64_t repeat = 1;
  bool count_ops = false;
  std::string verdict_out;
};

struct TamperOptions {
  std::string instance;
  std::string basis;
  std::string cert;
  std::string target = "basis_coeff";
  bool preserve_cheap_checks = false;
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> other_row;
  std::optional<std::uint64_t> value;
  std::uint64_t seed = 0;
  std::string basis_out;
  std::string cert_out;
};

struct BenchCase {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string sigma;
};

struct BenchOptions {
  std::vector<BenchCase> cases;
  std::string shift = "zero";
  std::uint64_t modulus = PrimeField::kMersenne61;
  std::uint64_t seeds = 1;
  std::string report_out;
};

// "MxN:profile" such as "16x16:uniform:256".
BenchCase parse_bench_case(const std::string& text);

// Each command returns its exit code and writes diagnostics to err.
// Library errors are mapped to kExitUsage, FieldTooSmall to
// kExitFieldTooSmall.
int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err);
int cmd_prove(const ProveOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_tamper(const TamperOptions& o, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err);

}  // namespace pmcert
