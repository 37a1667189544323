#include "mbonacci/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "mbonacci/error.hpp"
#include "mbonacci/recurrences.hpp"
#include "mbonacci/quotient_ring.hpp"
#include "mbonacci/symmetric_core.hpp"
#include "mbonacci/sympoly.hpp"

namespace mbonacci {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

std::string_view status_name(CellStatus s) {
  switch (s) {
    case CellStatus::pass: return "pass";
    case CellStatus::fail: return "fail";
    case CellStatus::skipped_cap: return "skipped-cap";
  }
  return "fail";
}

std::optional<ConjectureVariant> parse_variant(std::string_view name) {
  if (name == "as-stated") return ConjectureVariant::as_stated;
  if (name == "corrected") return ConjectureVariant::corrected;
  return std::nullopt;
}

bool VerificationReport::passed() const {
  return std::none_of(cells.begin(), cells.end(),
                      [](const Cell& c) { return c.status == CellStatus::fail; });
}

void VerificationReport::finalize() {
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::pair(a.m, a.n) < std::pair(b.m, b.n);
  });
  first_counterexample.reset();
  for (const Cell& c : cells) {
    if (c.status == CellStatus::fail) {
      first_counterexample = Counterexample{c.m, c.n, c.check, c.lhs, c.rhs, std::nullopt};
      break;
    }
  }
}

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Cell compare(std::size_t m, std::uint64_t n, std::string check, const BigInt& lhs,
             const BigInt& rhs) {
  return Cell{m, n, std::move(check), lhs, rhs,
              lhs == rhs ? CellStatus::pass : CellStatus::fail};
}

std::optional<BigInt> try_reduce(std::uint64_t n, std::size_t m, std::uint64_t cap) {
  try {
    return nested_sum_exact(n, m, cap);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

VerificationReport verify_identity(std::size_t m, std::uint64_t n_max,
                                   const VerifyOptions& opts) {
  if (m < 2) throw InvalidSpec("order must be at least 2");
  VerificationReport r;
  r.command = "verify identity --m " + std::to_string(m) + " --max-n " + std::to_string(n_max);
  const std::uint64_t reduce_top = std::min(n_max, opts.reduce_max_n);
  r.params = {{"m", m},
              {"max_n", n_max},
              {"methods", json::array({"recurrence", "reduce"})},
              {"reduce_max_n", reduce_top},
              {"cap", opts.cap},
              {"rhs_family", "paddedW"}};

  const std::vector<BigInt> rhs = window(make_family(Family::paddedW, m), 1, n_max + 1);

  Stopwatch rec;
  const HSequence h = h_sequence(m, n_max);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    r.cells.push_back(compare(m, n, "recurrence", h.values[n], rhs[n]));
  }
  r.timing_ms.emplace_back("recurrence", rec.elapsed_ms());

  Stopwatch red;
  for (std::uint64_t n = 0; n <= reduce_top; ++n) {
    if (auto lhs = try_reduce(n, m, opts.cap)) {
      r.cells.push_back(compare(m, n, "reduce", *lhs, rhs[n]));
    } else {
      r.cells.push_back(Cell{m, n, "reduce", std::nullopt, rhs[n], CellStatus::skipped_cap});
    }
  }
  r.timing_ms.emplace_back("reduce", red.elapsed_ms());
  r.finalize();
  return r;
}

VerificationReport verify_conjecture(std::size_t m_max, std::uint64_t n_max,
                                     ConjectureVariant variant, const VerifyOptions& opts) {
  if (m_max < 2) throw InvalidSpec("max m must be at least 2");
  const bool stated = variant == ConjectureVariant::as_stated;
  const Family family = stated ? Family::conjectureV : Family::paddedW;
  VerificationReport r;
  r.command = std::string("verify conjecture --variant ") +
              (stated ? "as-stated" : "corrected") + " --max-m " + std::to_string(m_max) +
              " --max-n " + std::to_string(n_max);
  const std::uint64_t cross_top = std::min(n_max, opts.cross_check_max_n);
  r.params = {{"max_m", m_max},
              {"max_n", n_max},
              {"variant", stated ? "as-stated" : "corrected"},
              {"hypothesis", stated ? "published conjecture: V_0 = 0, V_1 = ... = V_{m-1} = 1"
                                    : "artifact-introduced: zero-padded m-bonacci W"},
              {"rhs_family", std::string(family_name(family))},
              {"methods", json::array({"recurrence", "reduce"})},
              {"cross_check_max_n", cross_top},
              {"cap", opts.cap}};

  double rec_ms = 0.0;
  double red_ms = 0.0;
  for (std::size_t m = 2; m <= m_max; ++m) {
    Stopwatch rec;
    const HSequence h = h_sequence(m, n_max);
    const std::vector<BigInt> rhs = window(make_family(family, m), 1, n_max + 1);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      r.cells.push_back(compare(m, n, "conjecture", h.values[n], rhs[n]));
    }
    rec_ms += rec.elapsed_ms();

    Stopwatch red;
    for (std::uint64_t n = 0; n <= cross_top; ++n) {
      if (auto lhs = try_reduce(n, m, opts.cap)) {
        r.cells.push_back(compare(m, n, "cross-check", h.values[n], *lhs));
      } else {
        r.cells.push_back(
            Cell{m, n, "cross-check", h.values[n], std::nullopt, CellStatus::skipped_cap});
      }
    }
    red_ms += red.elapsed_ms();
  }
  r.finalize();
  if (r.first_counterexample && r.first_counterexample->check == "conjecture") {
    Stopwatch red;
    r.first_counterexample->lhs_reduce =
        try_reduce(r.first_counterexample->n, r.first_counterexample->m, opts.cap);
    red_ms += red.elapsed_ms();
  }
  r.timing_ms.emplace_back("recurrence", rec_ms);
  r.timing_ms.emplace_back("reduce", red_ms);
  return r;
}

VerificationReport verify_proof_steps(std::size_t m, std::uint64_t n_max,
                                      const VerifyOptions& opts) {
  if (m < 2) throw InvalidSpec("order must be at least 2");
  VerificationReport r;
  r.command = "verify proof-steps --m " + std::to_string(m) + " --max-n " + std::to_string(n_max);
  const std::uint64_t u_top = std::min(n_max, opts.u_step_max_n);
  r.params = {{"m", m},
              {"max_n", n_max},
              {"u_step_max_n", u_top},
              {"u_step_variables", 3},
              {"cap", opts.cap},
              {"methods", json::array({"u-step", "layer"})}};

  Stopwatch poly;
  for (std::uint64_t n = 0; n <= u_top; ++n) {
    CellStatus status;
    try {
      status = verify_u_step(n, opts.cap) ? CellStatus::pass : CellStatus::fail;
    } catch (const CapExceeded&) {
      status = CellStatus::skipped_cap;
    }
    r.cells.push_back(Cell{3, n, "u-step", std::nullopt, std::nullopt, status});
  }
  r.timing_ms.emplace_back("u-step", poly.elapsed_ms());

  Stopwatch ring;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    r.cells.push_back(Cell{m, n, "layer", std::nullopt, std::nullopt,
                           verify_layer_identity(n, m) ? CellStatus::pass : CellStatus::fail});
  }
  r.timing_ms.emplace_back("layer", ring.elapsed_ms());
  r.finalize();
  return r;
}

namespace {

json optional_int(const std::optional<BigInt>& v) {
  return v ? json(v->get_str()) : json(nullptr);
}

}  // namespace

json report_json(const VerificationReport& report, bool with_timing) {
  json cells = json::array();
  for (const Cell& c : report.cells) {
    cells.push_back({{"m", c.m},
                     {"n", c.n},
                     {"check", c.check},
                     {"lhs", optional_int(c.lhs)},
                     {"rhs", optional_int(c.rhs)},
                     {"status", std::string(status_name(c.status))}});
  }
  json doc = {{"command", report.command},
              {"params", report.params},
              {"cells", std::move(cells)},
              {"first_counterexample", nullptr},
              {"verdict", report.passed() ? "pass" : "fail"}};
  if (const auto& ce = report.first_counterexample) {
    doc["first_counterexample"] = {{"m", ce->m},
                                   {"n", ce->n},
                                   {"check", ce->check},
                                   {"lhs", optional_int(ce->lhs)},
                                   {"rhs", optional_int(ce->rhs)},
                                   {"lhs_reduce", optional_int(ce->lhs_reduce)}};
  }
  if (with_timing) {
    json timing = json::object();
    for (const auto& [name, ms] : report.timing_ms) timing[name] = ms;
    doc["timing_ms"] = std::move(timing);
  }
  return doc;
}

namespace {

std::string render_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n';
  os << "params:";
  for (const auto& [k, v] : r.params.items()) {
    os << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
  }
  os << "\n\n";

  struct Tally {
    std::size_t cells = 0, pass = 0, fail = 0, skipped = 0;
  };
  std::map<std::pair<std::size_t, std::string>, Tally> tallies;
  for (const Cell& c : r.cells) {
    Tally& t = tallies[{c.m, c.check}];
    ++t.cells;
    if (c.status == CellStatus::pass) ++t.pass;
    if (c.status == CellStatus::fail) ++t.fail;
    if (c.status == CellStatus::skipped_cap) ++t.skipped;
  }
  os << std::left << std::setw(13) << "check" << std::right << std::setw(4) << "m"
     << std::setw(8) << "cells" << std::setw(8) << "pass" << std::setw(8) << "fail"
     << std::setw(9) << "skipped" << '\n';
  for (const auto& [key, t] : tallies) {
    os << std::left << std::setw(13) << key.second << std::right << std::setw(4) << key.first
       << std::setw(8) << t.cells << std::setw(8) << t.pass << std::setw(8) << t.fail
       << std::setw(9) << t.skipped << '\n';
  }

  constexpr std::size_t kShown = 10;
  std::size_t shown = 0;
  for (const Cell& c : r.cells) {
    if (c.status != CellStatus::fail) continue;
    if (shown == 0) os << "\nfailures:\n";
    if (shown++ == kShown) {
      os << "  ...\n";
      break;
    }
    os << "  m=" << c.m << " n=" << c.n << " check=" << c.check;
    if (c.lhs) os << " lhs=" << c.lhs->get_str();
    if (c.rhs) os << " rhs=" << c.rhs->get_str();
    os << '\n';
  }

  os << "\nfirst counterexample: ";
  if (const auto& ce = r.first_counterexample) {
    os << "m=" << ce->m << " n=" << ce->n << " check=" << ce->check;
    if (ce->lhs) os << " lhs=" << ce->lhs->get_str();
    if (ce->rhs) os << " rhs=" << ce->rhs->get_str();
    if (ce->lhs_reduce) os << " (lhs by reduction: " << ce->lhs_reduce->get_str() << ')';
    os << '\n';
  } else {
    os << "none\n";
  }
  os << "timing:";
  for (const auto& [name, ms] : r.timing_ms) {
    os << ' ' << name << '=' << std::fixed << std::setprecision(1) << ms << "ms";
  }
  os << "\nverdict: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string render_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "m,n,check,lhs,rhs,status\n";
  for (const Cell& c : r.cells) {
    os << c.m << ',' << c.n << ',' << c.check << ',' << (c.lhs ? c.lhs->get_str() : "") << ','
       << (c.rhs ? c.rhs->get_str() : "") << ',' << status_name(c.status) << '\n';
  }
  return os.str();
}

}  // namespace

std::string render(const VerificationReport& report, Format format) {
  switch (format) {
    case Format::json: return report_json(report, true).dump(2) + "\n";
    case Format::csv: return render_csv(report);
    case Format::text: return render_text(report);
  }
  return render_text(report);
}

std::vector<BfileEntry> read_bfile(std::istream& in) {
  std::vector<BfileEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra)) {
      throw BfileError("b-file line " + std::to_string(line_no) +
                           ": expected \"index value\", got \"" + line + "\"",
                       line_no);
    }
    BigInt index;
    BigInt value;
    if (index.set_str(index_text, 10) != 0 || index < 0 || value.set_str(value_text, 10) != 0 ||
        index_text.find_first_of("+-") != std::string::npos) {
      throw BfileError("b-file line " + std::to_string(line_no) + ": malformed integer in \"" +
                           line + "\"",
                       line_no);
    }
    out.push_back({clamp_to_u64(index), std::move(value), line_no});
  }
  return out;
}

BfileCheck check_against_bfile(const std::vector<BigInt>& terms, std::uint64_t lo,
                               const std::vector<BfileEntry>& entries) {
  const std::uint64_t hi = lo + terms.size() - 1;
  std::vector<const BfileEntry*> inside;
  for (const BfileEntry& e : entries) {
    if (e.index >= lo && e.index <= hi) inside.push_back(&e);
  }
  if (terms.empty() || inside.empty()) {
    throw BfileError("b-file has no entries in the window " + std::to_string(lo) + ".." +
                         std::to_string(hi),
                     0);
  }
  std::stable_sort(inside.begin(), inside.end(),
                   [](const BfileEntry* a, const BfileEntry* b) { return a->index < b->index; });
  for (std::size_t i = 1; i < inside.size(); ++i) {
    if (inside[i]->index == inside[i - 1]->index) {
      throw BfileError("b-file line " + std::to_string(inside[i]->line) + ": duplicate index " +
                           std::to_string(inside[i]->index),
                       inside[i]->line);
    }
    if (inside[i]->index != inside[i - 1]->index + 1) {
      throw BfileError("b-file line " + std::to_string(inside[i]->line) + ": gap before index " +
                           std::to_string(inside[i]->index),
                       inside[i]->line);
    }
  }
  BfileCheck check;
  for (const BfileEntry* e : inside) {
    ++check.compared;
    const BigInt& actual = terms[e->index - lo];
    if (actual != e->value) check.mismatches.push_back({e->index, e->value, actual, e->line});
  }
  return check;
}

}  // namespace mbonacci
