#pragma once

// Whittaker-dimension reports for one parameter point and for parameter
// sweeps, with JSON / CSV / text rendering.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggm/coeff.hpp"
#include "ggm/cover.hpp"

namespace ggm {

enum class OutputFormat { text, json, csv };
OutputFormat parse_output_format(const std::string& s);

struct RunConfig {
  CoverSpec cover;
  TypeSpec type;
  /// Specialization point for the Hecke Hom computation; symbolic when empty.
  std::optional<Rational> q;
  std::uint64_t bound = kDefaultEnumerationBound;
  OutputFormat output = OutputFormat::text;

  /// Throws InvalidArgument on inconsistent parameters or q <= 1.
  void validate() const;
};

/// Parses "7", "-3/2" etc.; throws InvalidArgument.
Rational parse_rational(const std::string& s);

struct DimReport {
  CoverSpec cover;
  TypeSpec type;
  std::optional<Rational> q;

  std::optional<DerivedParams> derived;
  std::optional<std::uint64_t> x_order;
  std::optional<std::uint64_t> orbit_count;
  std::optional<Integer> dim_closed;
  std::optional<std::uint64_t> dim_bruteforce;
  std::optional<std::uint64_t> dim_hecke;
  /// All computed counts coincide and no internal check failed.
  bool agree = true;
  /// False for generic covers, whose dimension is not covered by a theorem.
  bool proved = true;
  std::vector<std::string> notes;
};

/// Runs the closed form, the orbit enumeration, the independent brute-force
/// count and the Hecke Hom computation, each within cfg.bound. Computations
/// that exceed the bound or do not apply are left empty with a note.
DimReport compute_dim_report(const RunConfig& cfg);

inline constexpr const char* kSweepCsvHeader =
    "kind,n,c,d,r,k,l0,r0,n0,d0,x_order,orbit_count,dim_closed,dim_bruteforce,dim_hecke,agree";

std::string csv_row(const DimReport& r);
std::string to_json(const DimReport& r, int indent = 2);
std::string to_text(const DimReport& r);

/// "3", "1..6", "1,2,5..7"; an empty range such as "5..4" yields nothing.
/// Throws InvalidArgument on malformed input.
std::vector<std::int64_t> parse_int_range(const std::string& s);

struct SweepSpec {
  std::vector<CoverKind> kinds{CoverKind::kp};
  std::vector<std::int64_t> n;
  /// Empty means every c in [0, n) (KP and generic; ignored for Savin).
  std::optional<std::vector<std::int64_t>> c;
  /// Generic covers only; empty means every d in [0, n).
  std::optional<std::vector<std::int64_t>> d;
  std::vector<std::int64_t> k;
  /// Explicit ranks; when empty, r = m k for every m in r_mult.
  std::optional<std::vector<std::int64_t>> r;
  std::vector<std::int64_t> r_mult{1};
  /// Empty means every divisor of n.
  std::optional<std::vector<std::int64_t>> l0;
  unsigned f = 1;
  std::optional<Rational> q;
  std::uint64_t bound = kDefaultEnumerationBound;
};

/// Valid parameter points in row order: lexicographic in
/// (kind, n, c, d, r, k, l0), kind compared by name. Combinations with
/// k not dividing r or l0 not dividing n are not parameter points.
std::vector<RunConfig> sweep_points(const SweepSpec& spec);

/// One report per point, computed on up to `threads` workers (0 = hardware
/// concurrency) and returned in point order.
std::vector<DimReport> run_sweep(const SweepSpec& spec, unsigned threads = 0);

std::string sweep_csv(const std::vector<DimReport>& rows);
std::string sweep_json(const std::vector<DimReport>& rows, int indent = 2);

}  // namespace ggm
