#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mbonacci/bigint.hpp"
#include "mbonacci/sympoly.hpp"

namespace mbonacci {

enum class Format { text, json, csv };

std::optional<Format> parse_format(std::string_view name);

enum class CellStatus { pass, fail, skipped_cap };

std::string_view status_name(CellStatus s);

/// One (m, n) comparison. lhs/rhs are absent for identities between
/// polynomials or ring elements, where only the verdict is scalar.
struct Cell {
  std::size_t m = 0;
  std::uint64_t n = 0;
  std::string check;
  std::optional<BigInt> lhs;
  std::optional<BigInt> rhs;
  CellStatus status = CellStatus::pass;
};

struct Counterexample {
  std::size_t m = 0;
  std::uint64_t n = 0;
  std::string check;
  std::optional<BigInt> lhs;
  std::optional<BigInt> rhs;
  /// Left-hand side recomputed by enumeration + symmetric reduction, when
  /// the composition count fits the cap.
  std::optional<BigInt> lhs_reduce;
};

struct VerificationReport {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Cell> cells;
  std::optional<Counterexample> first_counterexample;
  std::vector<std::pair<std::string, double>> timing_ms;

  bool passed() const;
  /// Orders cells by (m, n) and records the minimal failing cell.
  void finalize();
};

struct VerifyOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  /// verify identity: reduce pipeline runs for n <= this.
  std::uint64_t reduce_max_n = 20;
  /// verify conjecture: enumeration cross-check of the lhs for n <= this.
  std::uint64_t cross_check_max_n = 12;
  /// verify proof-steps: polynomial step identities for n <= this.
  std::uint64_t u_step_max_n = 30;
};

enum class ConjectureVariant { as_stated, corrected };

std::optional<ConjectureVariant> parse_variant(std::string_view name);

/// h_n against the (n+1)-th zero-padded m-bonacci term, via the h
/// recurrence for n <= n_max and via symmetric reduction for small n.
VerificationReport verify_identity(std::size_t m, std::uint64_t n_max,
                                   const VerifyOptions& opts = {});

/// Nested sum against V_{n+1} (as stated) or W_{n+1} (corrected) over
/// 2 <= m <= m_max, 0 <= n <= n_max.
VerificationReport verify_conjecture(std::size_t m_max, std::uint64_t n_max,
                                     ConjectureVariant variant,
                                     const VerifyOptions& opts = {});

VerificationReport verify_proof_steps(std::size_t m, std::uint64_t n_max,
                                      const VerifyOptions& opts = {});

/// Deterministic document; the timing object is added only on request.
nlohmann::json report_json(const VerificationReport& report, bool with_timing);

std::string render(const VerificationReport& report, Format format);

struct BfileEntry {
  std::uint64_t index;
  BigInt value;
  std::size_t line;
};

/// OEIS b-file: "index value" per line, '#' comments and blank lines skipped.
std::vector<BfileEntry> read_bfile(std::istream& in);

struct BfileMismatch {
  std::uint64_t index;
  BigInt expected;  // from the b-file
  BigInt actual;
  std::size_t line;
};

struct BfileCheck {
  std::size_t compared = 0;
  std::vector<BfileMismatch> mismatches;
};

/// Compares terms[i] (index lo + i) with every b-file entry inside the
/// window. The covered indices must be contiguous; gaps, duplicates or an
/// empty overlap raise BfileError.
BfileCheck check_against_bfile(const std::vector<BigInt>& terms, std::uint64_t lo,
                               const std::vector<BfileEntry>& entries);

}  // namespace mbonacci
