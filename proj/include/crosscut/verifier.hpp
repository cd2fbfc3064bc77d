#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crosscut/crosscut.hpp"
#include "crosscut/geometry.hpp"
#include "crosscut/rational.hpp"

namespace crosscut::verify {

/// How the unbounded domain {a >= 0, b >= 0, a + b >= 1} is sampled: a grid
/// over [0, box_max]^2, seeded random rationals in the same box, and extra
/// points. (1,0), (0,1) and (1,1) are always included.
struct SampleSpec {
  std::uint64_t seed = 1;
  Rational grid_step{1, 10};
  Rational box_max{4};
  std::size_t random_count = 200;
  unsigned long denominator_bound = 64;
  std::vector<std::pair<Rational, Rational>> extra_points;

  /// Throws Error{DomainError} for grid_step <= 0, box_max < 1 or a zero
  /// denominator bound.
  void validate() const;
};

/// Grid points in index order, then random points, then extras; no
/// duplicates (first occurrence wins).
std::vector<CanonicalParams> sample_omega(const SampleSpec& spec);

enum class BoundSide { Lower, Upper };

struct EqualityHit {
  CanonicalParams point;
  BoundSide side;
};

struct SampleIssue {
  CanonicalParams point;
  Rational ratio;
  std::string what;
};

struct BoundsReport {
  Rational k;
  RatioBounds bounds;
  std::size_t samples_checked = 0;
  std::vector<SampleIssue> violations;         // ratio outside [lower, upper]
  std::vector<SampleIssue> locus_mismatches;   // equality without locus, or locus without equality
  std::vector<SampleIssue> oracle_mismatches;  // geometric ratio != P/Q or != closed form
  Rational min_ratio;
  Rational max_ratio;
  std::vector<CanonicalParams> argmin;
  std::vector<CanonicalParams> argmax;
  std::vector<EqualityHit> equality_hits;

  [[nodiscard]] bool ok() const {
    return violations.empty() && locus_mismatches.empty() && oracle_mismatches.empty();
  }
};

/// Checks lower <= s/S <= upper exactly at every sample, that equality
/// happens exactly on the known loci, and that the line-intersection ratio
/// agrees with P/Q and with the closed-form vertices. Samples are split
/// across `workers` threads; the report does not depend on the count.
BoundsReport verify_bounds(const SampleSpec& spec, const Rational& k, unsigned workers = 1);

struct LocusReport {
  Rational k;
  std::vector<CanonicalParams> upper_line1;  // b*k + 1 - a - a*k = 0
  std::vector<CanonicalParams> upper_line2;  // b + b*k - 1 + a*k - 2k = 0
  std::size_t strict_lower_checked = 0;
  bool parallelogram_on_both = false;
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const { return violations.empty() && parallelogram_on_both; }
  /// Throws Error{LocusViolation} with the first offending point.
  void require() const;
};

/// Equality loci for k > 0: `count` points on each upper-bound line reach
/// the upper bound; (1,0) and (0,1) reach the lower bound; every other
/// sample of `spec` stays strictly above it.
LocusReport equality_locus_check(const Rational& k, std::size_t count, const SampleSpec& spec = {});

struct ExplorationRecord {
  CanonicalParams point;
  std::optional<Rational> ratio;  // empty when the construction failed
  bool simple = false;
  bool inside = false;
  bool parallel_failure = false;
  std::string failure;
  std::optional<Rational> pq_ratio;  // P/Q where all five factors of Q are nonzero
  std::optional<bool> pq_agrees;
};

/// Empirical behaviour of s/S for k in (-1, 0). Nothing here is a proven
/// bound; reports carry the CONJECTURAL label.
struct ExplorationReport {
  static constexpr const char* kLabel = "CONJECTURAL";
  Rational k;
  std::vector<ExplorationRecord> records;
  std::optional<Rational> min_ratio;
  std::optional<Rational> max_ratio;
  std::vector<CanonicalParams> argmin;
  std::vector<CanonicalParams> argmax;
  std::size_t failures = 0;
  std::size_t pq_defined = 0;
  std::size_t pq_agreements = 0;
  std::size_t simple_count = 0;
  std::size_t inside_count = 0;
};

/// Requires -1 < k < 0; `allow_zero` also admits k = 0 as a sanity run.
ExplorationReport empirical_extrema(const SampleSpec& spec, const Rational& k, unsigned workers = 1,
                                    bool allow_zero = false);

struct ScanRow {
  Rational k;
  std::optional<RatioBounds> bounds;  // k > 0 only
  std::optional<Rational> empirical_min;
  std::optional<Rational> empirical_max;
  std::size_t samples = 0;
  std::size_t equality_hits = 0;
  std::size_t violations = 0;  // bound, locus or oracle issues for k > 0
};

/// One row per k (each k > -1). k = 0 gives the constant ratio 1.
std::vector<ScanRow> scan_k(const std::vector<Rational>& ks, const SampleSpec& spec, unsigned workers = 1);

}  // namespace crosscut::verify
