#include "pmcert/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "pmcert/certificate.hpp"
#include "pmcert/certifier.hpp"
#include "pmcert/exact_checks.hpp"
#include "pmcert/formats.hpp"
#include "pmcert/prover.hpp"

namespace pmcert {

namespace {

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const FieldTooSmall& e) {
    err << "error: field too small: " << e.what() << '\n';
    return kExitFieldTooSmall;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitUsage;
  }
}

std::uint64_t seed_from_env_or_random() {
  if (const char* env = std::getenv("APPBASCERT_SEED"); env != nullptr && *env != '\0') {
    std::uint64_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc{} || ptr != end) throw InvalidArgument("APPBASCERT_SEED is not an unsigned integer");
    return v;
  }
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void check_modulus(const Instance& inst, std::uint64_t other, const char* what) {
  if (other != inst.modulus) {
    throw ModulusMismatch(std::string(what) + " is over F_" + std::to_string(other) + ", instance over F_" +
                          std::to_string(inst.modulus));
  }
}

struct Loaded {
  Instance inst;
  PolyMatrix basis;
  ConstMatrix cert;
};

Loaded load_triple(const std::string& inst_path, const std::string& basis_path, const std::string& cert_path) {
  Loaded l;
  l.inst = parse_instance(read_file(inst_path));
  l.inst.validate();
  BasisDocument b = parse_basis(read_file(basis_path));
  CertificateDocument c = parse_certificate(read_file(cert_path));
  check_modulus(l.inst, b.modulus, "basis");
  check_modulus(l.inst, c.modulus, "certificate");
  if (b.basis.rows() != l.inst.m()) throw DimensionMismatch("basis is not m x m for this instance");
  if (c.certificate.rows() != l.inst.m() || c.certificate.cols() != l.inst.n()) {
    throw DimensionMismatch("certificate is not m x n for this instance");
  }
  l.basis = std::move(b.basis);
  l.cert = std::move(c.certificate);
  return l;
}

void print_ops(std::ostream& out, const char* label, const OpTally& t) {
  out << label << ": " << t.total() << " field ops (add " << t.add_like << ", mul " << t.mul << ", inv " << t.inv
      << ")\n";
}

struct BenchRow {
  BenchCase c;
  std::int64_t total_order = 0;
  std::uint64_t seed = 0;
  OpTally prove, cert, verify, naive;
  bool accepted = false;
};

}  // namespace

BenchCase parse_bench_case(const std::string& text) {
  const std::size_t x = text.find('x');
  const std::size_t colon = text.find(':');
  if (x == std::string::npos || colon == std::string::npos || x > colon) {
    throw InvalidArgument("bench case must look like MxN:profile, got '" + text + "'");
  }
  BenchCase c;
  const auto num = [&](std::size_t from, std::size_t to) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + from, text.data() + to, v);
    if (ec != std::errc{} || ptr != text.data() + to) throw InvalidArgument("bad dimension in '" + text + "'");
    return v;
  };
  c.m = num(0, x);
  c.n = num(x + 1, colon);
  c.sigma = text.substr(colon + 1);
  parse_sigma_profile(c.sigma);
  return c;
}

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PrimeField f(o.modulus);
    const Instance inst =
        gen_random_instance(f, o.m, o.n, parse_sigma_profile(o.sigma), parse_shift_profile(o.shift), o.seed);
    const std::string text = serialize_instance(inst);
    if (o.out.empty()) {
      out << text;
    } else {
      write_file(o.out, text);
    }
    return kExitAccept;
  });
}

int cmd_prove(const ProveOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(read_file(o.instance));
    inst.validate();
    const PrimeField f(inst.modulus, o.count_ops);
    const PolyMatrix p = iterative_appbas(f, inst);
    const OpTally after_prove = f.tally();
    const ConstMatrix c = compute_certificate(f, inst.sigma, inst.f, p);
    const OpTally cert_ops = f.tally() - after_prove;
    write_file(o.basis_out, serialize_basis({inst.modulus, p}));
    write_file(o.cert_out, serialize_certificate({inst.modulus, c}));
    out << "basis written to " << o.basis_out << ", certificate to " << o.cert_out << '\n';
    if (o.count_ops) {
      print_ops(out, "prove", after_prove);
      print_ops(out, "certificate", cert_ops);
    }
    return kExitAccept;
  });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.repeat == 0) throw InvalidArgument("--repeat must be at least 1");
    const Loaded l = load_triple(o.instance, o.basis, o.cert);
    const PrimeField f(l.inst.modulus, o.count_ops);
    const std::uint64_t seed = o.seed ? *o.seed : seed_from_env_or_random();

    CertifyOptions copts;
    copts.sampling_set_size = o.s_size;
    copts.mode = o.zeta ? ChallengeMode::powers_of_zeta : ChallengeMode::independent;

    VerdictDocument doc;
    doc.modulus = l.inst.modulus;
    doc.m = l.inst.m();
    doc.n = l.inst.n();
    doc.seed = seed;
    doc.sampling_set_size = o.s_size.value_or(f.modulus());
    doc.accepted = true;
    const SeededRng root(seed);
    OpTally total;
    std::optional<std::pair<std::uint64_t, FailedCondition>> first_reject;
    for (std::uint64_t r = 0; r < o.repeat; ++r) {
      SeededRng rng = o.repeat == 1 ? root : root.split(r);
      const Verdict v = certify(f, l.inst, l.basis, l.cert, rng, copts);
      doc.runs.push_back(run_record(v, rng.seed()));
      total = total + v.ops;
      if (!v.accepted) {
        doc.accepted = false;
        if (!first_reject) first_reject = {r, *v.failed_condition};
      }
    }
    if (!o.verdict_out.empty()) write_file(o.verdict_out, serialize_verdict(doc));

    const std::int64_t total_order = l.inst.sigma.total();
    const double bound = static_cast<double>(total_order + 1) / static_cast<double>(doc.sampling_set_size - 1);
    if (doc.accepted) {
      out << "accept (" << o.repeat << " run" << (o.repeat == 1 ? "" : "s") << ", seed " << seed << ")\n";
      out << "wrong-accept bound per run: (D+1)/(#S-1) = " << std::setprecision(6) << bound << '\n';
    } else {
      out << "reject: " << to_string(first_reject->second) << " (run " << first_reject->first << ", seed " << seed
          << ")\n";
    }
    if (o.count_ops) print_ops(out, "verify", total);
    return doc.accepted ? kExitAccept : kExitReject;
  });
}

int cmd_tamper(const TamperOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load_triple(o.instance, o.basis, o.cert);
    const PrimeField f(l.inst.modulus);
    TamperSpec spec;
    const auto target = tamper_target_from_string(o.target);
    if (!target) throw InvalidArgument("unknown tamper target '" + o.target + "'");
    spec.target = *target;
    spec.preserve_cheap_checks = o.preserve_cheap_checks;
    spec.row = o.row;
    spec.col = o.col;
    spec.degree = o.degree;
    spec.other_row = o.other_row;
    if (o.value) {
      if (!f.is_canonical(*o.value)) throw InvalidArgument("--value must be below p");
      spec.value = FieldElem::from_canonical(*o.value);
    }
    SeededRng rng(o.seed);
    const TamperResult r = tamper(f, l.inst, l.basis, l.cert, spec, rng);
    write_file(o.basis_out.empty() ? o.basis : o.basis_out, serialize_basis({l.inst.modulus, r.basis}));
    write_file(o.cert_out.empty() ? o.cert : o.cert_out, serialize_certificate({l.inst.modulus, r.certificate}));
    out << "violated: " << (r.tag ? to_string(*r.tag) : std::string_view("none")) << '\n';
    return kExitAccept;
  });
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.cases.empty()) throw InvalidArgument("bench needs at least one case");
    const ShiftProfile shift = parse_shift_profile(o.shift);
    std::vector<BenchRow> rows;
    for (const BenchCase& bc : o.cases) {
      for (std::uint64_t seed = 0; seed < o.seeds; ++seed) {
        const PrimeField f(o.modulus, true);
        BenchRow row;
        row.c = bc;
        row.seed = seed;
        const Instance inst = gen_random_instance(f, bc.m, bc.n, parse_sigma_profile(bc.sigma), shift, seed);
        row.total_order = inst.sigma.total();
        f.reset_tally();
        const PolyMatrix p = iterative_appbas(f, inst);
        row.prove = f.tally();
        f.reset_tally();
        const ConstMatrix c = compute_certificate(f, inst.sigma, inst.f, p);
        row.cert = f.tally();
        SeededRng rng(seed);
        const Verdict v = certify(f, inst, p, c, rng);
        row.verify = v.ops;
        row.accepted = v.accepted;
        f.reset_tally();
        if (!recompute_product_check(f, inst, p, c)) throw Error("baseline rejected an honest basis");
        row.naive = f.tally();
        rows.push_back(row);
      }
    }
    std::ostringstream table;
    table << "m\tn\tsigma\tD\tseed\tprove_ops\tcert_ops\tverify_ops\tnaive_ops\tnaive/verify\taccepted\n";
    for (const BenchRow& r : rows) {
      const double ratio = static_cast<double>(r.naive.total()) / static_cast<double>(r.verify.total());
      table << r.c.m << '\t' << r.c.n << '\t' << r.c.sigma << '\t' << r.total_order << '\t' << r.seed << '\t'
            << r.prove.total() << '\t' << r.cert.total() << '\t' << r.verify.total() << '\t' << r.naive.total()
            << '\t' << std::fixed << std::setprecision(2) << ratio << std::defaultfloat << '\t'
            << (r.accepted ? "yes" : "no") << '\n';
    }
    out << table.str();
    if (!o.report_out.empty()) write_file(o.report_out, table.str());
    return kExitAccept;
  });
}

}  // namespace pmcert
