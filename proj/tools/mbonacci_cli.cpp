// Command-line front end: sequence tables, root reports, nested-sum values,
// verification sweeps and expression evaluation.
//
// Exit codes: 0 all checks pass, 1 counterexample found, 2 usage/parse/cap
// error, 3 numeric non-convergence.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "mbonacci/error.hpp"
#include "mbonacci/expr.hpp"
#include "mbonacci/recurrences.hpp"
#include "mbonacci/report.hpp"
#include "mbonacci/rootfind.hpp"
#include "mbonacci/symmetric_core.hpp"
#include "mbonacci/sympoly.hpp"

namespace {

using namespace mbonacci;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;
constexpr int kNoConvergence = 3;

constexpr const char* kFormatEnv = "MBONACCI_FORMAT";

struct Options {
  std::string format;
  std::string command_line;
  // seq
  std::string family;
  std::size_t m = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 10;
  std::string bfile;
  // roots / numeric
  double tol = 1e-12;
  std::size_t max_iter = 500;
  double rel_tol = 1e-6;
  // nested-sum
  std::uint64_t n = 0;
  std::string method = "recurrence";
  std::uint64_t cap = kDefaultEnumerationCap;
  // verify
  std::uint64_t max_n = 100;
  std::size_t max_m = 8;
  std::string variant = "as-stated";
  std::uint64_t reduce_max_n = 20;
  std::uint64_t cross_check_n = 12;
  // eval
  std::string expression;
};

Format resolve_format(const Options& o) {
  std::string name = o.format;
  if (name.empty()) {
    if (const char* env = std::getenv(kFormatEnv); env && *env) name = env;
  }
  if (name.empty()) return Format::text;
  if (auto f = parse_format(name)) return *f;
  throw InvalidSpec("unknown output format '" + name + "' (expected text, json or csv)");
}

std::string fmt_double(double v, int precision = 15) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string fmt_complex(std::complex<double> z) {
  std::ostringstream os;
  os << fmt_double(z.real()) << (z.imag() < 0 ? " - " : " + ") << fmt_double(std::abs(z.imag()))
     << "i";
  return os.str();
}

int cmd_seq(const Options& o, Format fmt) {
  const auto family = parse_family(o.family);
  if (!family || *family == Family::custom) {
    throw InvalidSpec("unknown family '" + o.family +
                      "' (expected tribonacci, fibonacci, conjectureV or paddedW)");
  }
  std::size_t m = o.m;
  if (m == 0) {
    if (*family == Family::tribonacci) m = 3;
    else if (*family == Family::fibonacci) m = 2;
    else throw InvalidSpec("--m is required for family " + o.family);
  } else if ((*family == Family::tribonacci && m != 3) || (*family == Family::fibonacci && m != 2)) {
    throw InvalidSpec("family " + o.family + " has fixed order " +
                      (*family == Family::tribonacci ? "3" : "2") + ", got --m " +
                      std::to_string(m));
  }
  const RecurrenceSpec spec = make_family(*family, m);
  const std::vector<BigInt> terms = window(spec, o.lo, o.hi);

  std::optional<BfileCheck> check;
  if (!o.bfile.empty()) {
    std::ifstream in(o.bfile);
    if (!in) throw BfileError("cannot open b-file '" + o.bfile + "'", 0);
    check = check_against_bfile(terms, o.lo, read_bfile(in));
  }

  if (fmt == Format::json) {
    json doc = {{"command", o.command_line},
                {"family", std::string(family_name(*family))},
                {"m", m},
                {"from", o.lo},
                {"to", o.hi}};
    json values = json::array();
    for (const auto& t : terms) values.push_back(t.get_str());
    doc["terms"] = std::move(values);
    if (check) {
      json mism = json::array();
      for (const auto& mm : check->mismatches) {
        mism.push_back({{"index", mm.index},
                        {"expected", mm.expected.get_str()},
                        {"actual", mm.actual.get_str()},
                        {"line", mm.line}});
      }
      doc["bfile"] = {{"path", o.bfile}, {"compared", check->compared}, {"mismatches", mism}};
    }
    std::cout << doc.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    std::cout << "n,value\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::cout << o.lo + i << ',' << terms[i].get_str() << '\n';
    }
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::cout << (i ? " " : "") << terms[i].get_str();
    }
    std::cout << '\n';
    if (check) {
      std::cout << "b-file " << o.bfile << ": compared " << check->compared << " terms, "
                << check->mismatches.size() << " mismatches\n";
      for (const auto& mm : check->mismatches) {
        std::cout << "  index " << mm.index << " (line " << mm.line << "): b-file "
                  << mm.expected.get_str() << ", computed " << mm.actual.get_str() << '\n';
      }
    }
  }
  if (check && !check->mismatches.empty()) {
    if (fmt != Format::text) {
      std::cerr << "b-file mismatch at index " << check->mismatches.front().index << '\n';
    }
    return kCounterexample;
  }
  return kPass;
}

int cmd_roots(const Options& o, Format fmt) {
  if (o.m < 2) throw InvalidSpec("--m must be at least 2");
  const RootSet rs = find_roots(o.m, o.tol, o.max_iter);
  const std::vector<double> vres = rs.converged ? vieta_residuals(rs) : std::vector<double>{};

  if (fmt == Format::json) {
    json roots = json::array();
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      roots.push_back({{"re", rs.roots[i].real()},
                       {"im", rs.roots[i].imag()},
                       {"modulus", std::abs(rs.roots[i])},
                       {"residual", rs.residuals[i]}});
    }
    json doc = {{"command", o.command_line}, {"m", o.m},          {"tol", o.tol},
                {"max_iter", o.max_iter},   {"roots", roots},    {"vieta_residuals", vres},
                {"iterations", rs.iterations}, {"converged", rs.converged}};
    std::cout << doc.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    std::cout << "index,re,im,modulus,residual\n";
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      std::cout << i << ',' << fmt_double(rs.roots[i].real(), 17) << ','
                << fmt_double(rs.roots[i].imag(), 17) << ','
                << fmt_double(std::abs(rs.roots[i]), 17) << ',' << rs.residuals[i] << '\n';
    }
  } else {
    std::cout << "roots of x^" << o.m << " - x^" << o.m - 1 << " - ... - 1\n";
    std::cout << std::left << std::setw(4) << "#" << std::setw(44) << "root" << std::setw(20)
              << "modulus" << "|p(root)|\n";
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      std::cout << std::left << std::setw(4) << i << std::setw(44) << fmt_complex(rs.roots[i])
                << std::setw(20) << fmt_double(std::abs(rs.roots[i])) << rs.residuals[i]
                << (i == 0 ? "  (dominant)" : "") << '\n';
    }
    if (!vres.empty()) {
      std::cout << "vieta residuals |e_k - (-1)^(k+1)|:";
      for (double v : vres) std::cout << ' ' << fmt_double(v, 3);
      std::cout << '\n';
    }
    std::cout << (rs.converged ? "converged" : "NOT converged") << " after " << rs.iterations
              << " iterations (tol " << o.tol << ")\n";
  }
  if (!rs.converged) {
    std::cerr << "error: root iteration did not converge within " << o.max_iter
              << " iterations\n";
    return kNoConvergence;
  }
  return kPass;
}

int cmd_nested_sum(const Options& o, Format fmt) {
  if (o.m < 2) throw InvalidSpec("--m must be at least 2");
  json doc = {{"command", o.command_line}, {"m", o.m}, {"n", o.n}, {"method", o.method}};
  std::string value;
  int code = kPass;
  std::string text_extra;

  if (o.method == "recurrence") {
    value = h_sequence(o.m, o.n).values[o.n].get_str();
  } else if (o.method == "reduce" || o.method == "enumerate-exact") {
    value = nested_sum_exact(o.n, o.m, o.cap).get_str();
    doc["cap"] = o.cap;
  } else if (o.method == "numeric") {
    const RootSet rs = find_roots(o.m, o.tol, o.max_iter);
    if (!rs.converged) {
      std::cerr << "error: root iteration did not converge within " << o.max_iter
                << " iterations\n";
      return kNoConvergence;
    }
    const NumericSum s = numeric_nested_sum(rs, o.n, o.cap);
    const BigInt exact = h_sequence(o.m, o.n).values[o.n];
    const double rel = std::abs(s.value - exact.get_d()) / std::max(1.0, std::abs(exact.get_d()));
    const bool agrees = rel < o.rel_tol;
    value = fmt_double(s.value.real(), 17);
    doc["imag"] = s.value.imag();
    doc["error_estimate"] = s.error_estimate;
    doc["terms"] = s.terms;
    doc["exact"] = exact.get_str();
    doc["relative_error"] = rel;
    doc["rel_tol"] = o.rel_tol;
    doc["agrees"] = agrees;
    std::ostringstream os;
    os << "  imaginary part " << fmt_double(s.value.imag(), 3) << ", error estimate "
       << fmt_double(s.error_estimate, 3) << ", " << s.terms << " terms\n"
       << "  exact " << exact.get_str() << ", relative error " << fmt_double(rel, 3)
       << (agrees ? " (agrees" : " (DISAGREES") << " at rel-tol " << o.rel_tol << ")\n";
    text_extra = os.str();
    if (!agrees) code = kCounterexample;
  } else {
    throw InvalidSpec("unknown method '" + o.method +
                      "' (expected recurrence, reduce, numeric or enumerate-exact)");
  }

  doc["value"] = value;
  if (fmt == Format::json) {
    std::cout << doc.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    std::cout << "m,n,method,value\n" << o.m << ',' << o.n << ',' << o.method << ',' << value
              << '\n';
  } else {
    std::cout << value << '\n' << text_extra;
  }
  return code;
}

int emit_report(VerificationReport report, const Options& o, Format fmt) {
  report.command = o.command_line;
  std::cout << render(report, fmt);
  return report.passed() ? kPass : kCounterexample;
}

int cmd_eval(const Options& o, Format fmt) {
  if (o.m < 2) throw InvalidSpec("--m must be at least 2");
  const BigInt v = expr::evaluate(o.expression, o.m);
  if (fmt == Format::json) {
    std::cout << json{{"command", o.command_line},
                      {"m", o.m},
                      {"expression", o.expression},
                      {"value", v.get_str()}}
                     .dump(2)
              << '\n';
  } else if (fmt == Format::csv) {
    std::cout << "m,expression,value\n" << o.m << ",\"" << o.expression << "\"," << v.get_str()
              << '\n';
  } else {
    std::cout << v.get_str() << '\n';
  }
  return kPass;
}

void print_expr_error(const Options& o, const ExprError& e) {
  std::cerr << "error: " << e.what() << '\n';
  std::cerr << "  " << o.expression << '\n';
  std::cerr << "  " << std::string(e.offset(), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int i = 1; i < argc; ++i) o.command_line += (i > 1 ? " " : "") + std::string(argv[i]);

  CLI::App app{"Exact verification of nested power sums over m-bonacci characteristic roots"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format: text, json or csv (default from $" +
                                           std::string(kFormatEnv) + ", else text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.fallthrough();

  auto* seq = app.add_subcommand("seq", "Print terms of a recurrence family");
  seq->add_option("--family", o.family, "tribonacci, fibonacci, conjectureV or paddedW")
      ->required();
  seq->add_option("--m", o.m, "Order (implied for tribonacci and fibonacci)");
  seq->add_option("--from", o.lo, "First index");
  seq->add_option("--to", o.hi, "Last index");
  seq->add_option("--expect-bfile", o.bfile, "Cross-check against an OEIS b-file");

  auto* roots = app.add_subcommand("roots", "Complex roots of the characteristic polynomial");
  roots->add_option("--m", o.m, "Order")->required();
  roots->add_option("--tol", o.tol, "Update-norm tolerance");
  roots->add_option("--max-iter", o.max_iter, "Iteration limit");

  auto* nested = app.add_subcommand("nested-sum", "Value of the nested power sum h_n");
  nested->add_option("--m", o.m, "Order")->required();
  nested->add_option("--n", o.n, "Degree")->required();
  nested->add_option("--method", o.method, "recurrence, reduce, numeric or enumerate-exact")
      ->check(CLI::IsMember({"recurrence", "reduce", "numeric", "enumerate-exact"}));
  nested->add_option("--cap", o.cap, "Enumeration cap for reduce/numeric");
  nested->add_option("--tol", o.tol, "Root tolerance (numeric)");
  nested->add_option("--max-iter", o.max_iter, "Root iteration limit (numeric)");
  nested->add_option("--rel-tol", o.rel_tol, "Relative comparison tolerance (numeric)");

  auto* verify = app.add_subcommand("verify", "Verification sweeps");
  verify->require_subcommand(1);
  auto* identity = verify->add_subcommand("identity", "h_n against the shifted m-bonacci term");
  identity->add_option("--m", o.m, "Order")->required();
  identity->add_option("--max-n", o.max_n, "Largest n");
  identity->add_option("--cap", o.cap, "Enumeration cap");
  identity->add_option("--reduce-max-n", o.reduce_max_n, "Largest n for the reduce pipeline");

  auto* conjecture = verify->add_subcommand("conjecture", "Sweep the general-m conjecture");
  conjecture->add_option("--variant", o.variant,
                         "as-stated (published initial terms) or corrected (zero-padded W)")
      ->check(CLI::IsMember({"as-stated", "corrected"}));
  conjecture->add_option("--max-m", o.max_m, "Largest order");
  conjecture->add_option("--max-n", o.max_n, "Largest n");
  conjecture->add_option("--cap", o.cap, "Enumeration cap");
  conjecture->add_option("--cross-check-n", o.cross_check_n,
                         "Largest n for the enumeration cross-check");

  auto* proof = verify->add_subcommand("proof-steps", "Polynomial and ring step identities");
  proof->add_option("--m", o.m, "Order")->required();
  proof->add_option("--max-n", o.max_n, "Largest n");
  proof->add_option("--cap", o.cap, "Enumeration cap");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression in e(k), p(k), h(k), T, V, W, F");
  eval->add_option("--m", o.m, "Order")->required();
  eval->add_option("expression", o.expression, "Expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Format fmt = resolve_format(o);
    VerifyOptions vopts;
    vopts.cap = o.cap;
    vopts.reduce_max_n = o.reduce_max_n;
    vopts.cross_check_max_n = o.cross_check_n;

    if (*seq) return cmd_seq(o, fmt);
    if (*roots) return cmd_roots(o, fmt);
    if (*nested) return cmd_nested_sum(o, fmt);
    if (*eval) return cmd_eval(o, fmt);
    if (*identity) return emit_report(verify_identity(o.m, o.max_n, vopts), o, fmt);
    if (*conjecture) {
      return emit_report(verify_conjecture(o.max_m, o.max_n, *parse_variant(o.variant), vopts),
                         o, fmt);
    }
    if (*proof) return emit_report(verify_proof_steps(o.m, o.max_n, vopts), o, fmt);
  } catch (const ExprError& e) {
    print_expr_error(o, e);
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what()
              << "; raise --cap or use --method recurrence for large inputs\n";
    return kUsage;
  } catch (const NotConverged& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
