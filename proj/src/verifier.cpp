#include "crosscut/verifier.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "crosscut/errors.hpp"
#include "crosscut/identities.hpp"
#include "crosscut/rng.hpp"

namespace crosscut::verify {

namespace {

// Runs fn(i) for i in [0, n) on up to `workers` threads; results are stored
// by index, so the output is the same for any worker count.
template <typename Fn>
auto parallel_map(std::size_t n, unsigned workers, Fn fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out(n);
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

Assignment at(const CanonicalParams& p, const Rational& k) { return {p.a(), p.b(), k}; }

// P/Q at a point, or nothing when one of the five factors of Q vanishes.
class PQEvaluator {
 public:
  PQEvaluator() : p_(poly::build_P()), factors_(poly::q_factors()) {}

  [[nodiscard]] std::optional<Rational> operator()(const Assignment& x) const {
    Rational q(1);
    for (const MPoly& f : factors_) {
      const Rational v = f.eval(x);
      if (v.is_zero()) return std::nullopt;
      q *= v;
    }
    return p_.eval(x) / q;
  }

 private:
  MPoly p_;
  std::array<MPoly, 5> factors_;
};

Rational floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.gmp().get_num_mpz_t(), x.gmp().get_den_mpz_t());
  return Rational(mpq_class(q));
}

void track_extreme(const Rational& value, const CanonicalParams& point, std::optional<Rational>& best,
                   std::vector<CanonicalParams>& args, bool want_min) {
  if (!best || (want_min ? value < *best : value > *best)) {
    best = value;
    args.assign(1, point);
  } else if (value == *best) {
    args.push_back(point);
  }
}

}  // namespace

void SampleSpec::validate() const {
  if (grid_step.sign() <= 0) throw Error(ErrorKind::DomainError, "grid step must be positive");
  if (box_max < Rational(1)) throw Error(ErrorKind::DomainError, "box must be at least 1");
  if (denominator_bound == 0) throw Error(ErrorKind::DomainError, "denominator bound must be positive");
}

std::vector<CanonicalParams> sample_omega(const SampleSpec& spec) {
  spec.validate();
  std::vector<CanonicalParams> out;
  std::set<std::pair<Rational, Rational>> seen;
  auto add = [&](const Rational& a, const Rational& b) {
    if (!CanonicalParams::in_domain(a, b)) return false;
    if (!seen.emplace(a, b).second) return false;
    out.emplace_back(a, b);
    return true;
  };

  const long steps = floor_of(spec.box_max / spec.grid_step).numerator().get_si();
  for (long i = 0; i <= steps; ++i) {
    for (long j = 0; j <= steps; ++j) add(Rational(i) * spec.grid_step, Rational(j) * spec.grid_step);
  }

  DeterministicRng rng(spec.seed);
  const auto draw = [&] {
    const auto d = 1 + rng.below(spec.denominator_bound);
    const Rational max_num = floor_of(spec.box_max * Rational(static_cast<long>(d)));
    const auto n = rng.below(static_cast<std::uint64_t>(max_num.numerator().get_ui()) + 1);
    return Rational(static_cast<long>(n), static_cast<long>(d));
  };
  std::size_t accepted = 0;
  for (std::size_t attempts = 0; accepted < spec.random_count && attempts < 50 * spec.random_count + 100; ++attempts) {
    const Rational a = draw();
    const Rational b = draw();
    if (add(a, b)) ++accepted;
  }

  for (const auto& [a, b] : {std::pair<Rational, Rational>{1, 0}, {0, 1}, {1, 1}}) add(a, b);
  for (const auto& [a, b] : spec.extra_points) {
    if (!CanonicalParams::in_domain(a, b)) {
      throw Error(ErrorKind::DomainError, "extra point (" + a.str() + ", " + b.str() + ") is outside the domain");
    }
    add(a, b);
  }
  return out;
}

BoundsReport verify_bounds(const SampleSpec& spec, const Rational& k, unsigned workers) {
  const KParam kp = KParam::from_segment_ratio(k);
  BoundsReport report;
  report.k = k;
  report.bounds = theorem_bounds(k);
  const auto samples = sample_omega(spec);
  const PQEvaluator pq;

  struct Outcome {
    Rational ratio;
    std::optional<Rational> pq_ratio;
    Rational closed;
  };
  const auto outcomes = parallel_map(samples.size(), workers, [&](std::size_t i) {
    const CanonicalParams& p = samples[i];
    return Outcome{canonical_ratio(p, kp), pq(at(p, k)), closed_form_ratio(p, kp)};
  });

  std::optional<Rational> lo;
  std::optional<Rational> hi;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const CanonicalParams& p = samples[i];
    const Outcome& o = outcomes[i];
    ++report.samples_checked;
    if (o.ratio < report.bounds.lower) report.violations.push_back({p, o.ratio, "below lower bound"});
    if (o.ratio > report.bounds.upper) report.violations.push_back({p, o.ratio, "above upper bound"});
    if (!o.pq_ratio || *o.pq_ratio != o.ratio) report.oracle_mismatches.push_back({p, o.ratio, "P/Q disagrees"});
    if (o.closed != o.ratio) report.oracle_mismatches.push_back({p, o.ratio, "closed-form vertices disagree"});

    const bool at_lower = o.ratio == report.bounds.lower;
    const bool at_upper = o.ratio == report.bounds.upper;
    if (at_lower) report.equality_hits.push_back({p, BoundSide::Lower});
    if (at_upper) report.equality_hits.push_back({p, BoundSide::Upper});
    if (at_lower != on_lower_locus(p)) {
      report.locus_mismatches.push_back({p, o.ratio, at_lower ? "lower equality off the locus" : "lower locus without equality"});
    }
    if (at_upper != on_upper_locus(p, k)) {
      report.locus_mismatches.push_back({p, o.ratio, at_upper ? "upper equality off the lines" : "upper line without equality"});
    }
    track_extreme(o.ratio, p, lo, report.argmin, true);
    track_extreme(o.ratio, p, hi, report.argmax, false);
  }
  if (lo) report.min_ratio = *lo;
  if (hi) report.max_ratio = *hi;
  return report;
}

void LocusReport::require() const {
  if (!violations.empty()) throw Error(ErrorKind::LocusViolation, violations.front());
  if (!parallelogram_on_both) throw Error(ErrorKind::LocusViolation, "(1, 1) is not on both upper-bound lines");
}

LocusReport equality_locus_check(const Rational& k, std::size_t count, const SampleSpec& spec) {
  const KParam kp = KParam::from_segment_ratio(k);
  const RatioBounds bounds = theorem_bounds(k);
  const Rational one(1);
  LocusReport report;
  report.k = k;

  // Line 1: a = (b k + 1) / (k + 1), inside the domain for b >= k / (2k + 1).
  const Rational line1_b_min = k / (Rational(2) * k + one);
  for (long j = 0; report.upper_line1.size() < count; ++j) {
    const Rational b(j, 2);
    if (b < line1_b_min) continue;
    report.upper_line1.emplace_back((b * k + one) / (k + one), b);
  }
  // Line 2: a = (1 + 2k - b - b k) / k, inside the domain for
  // 0 <= b <= (1 + 2k) / (1 + k).
  const Rational line2_b_max = (one + Rational(2) * k) / (one + k);
  for (std::size_t j = 0; j < count; ++j) {
    const Rational b = count == 1 ? Rational(0) : line2_b_max * Rational(static_cast<long>(j)) / Rational(static_cast<long>(count - 1));
    report.upper_line2.emplace_back((one + Rational(2) * k - b - b * k) / k, b);
  }

  const auto check_upper = [&](const std::vector<CanonicalParams>& pts, const char* line) {
    for (const auto& p : pts) {
      const Rational r = canonical_ratio(p, kp);
      if (r != bounds.upper) {
        report.violations.push_back(std::string("ratio ") + r.str() + " != upper bound at " + p.str() + " on " + line);
      }
    }
  };
  check_upper(report.upper_line1, "line 1");
  check_upper(report.upper_line2, "line 2");

  for (const CanonicalParams& p : {CanonicalParams(1, 0), CanonicalParams(0, 1)}) {
    const Rational r = canonical_ratio(p, kp);
    if (r != bounds.lower) report.violations.push_back("ratio " + r.str() + " != lower bound at " + p.str());
  }
  for (const CanonicalParams& p : sample_omega(spec)) {
    if (on_lower_locus(p)) continue;
    ++report.strict_lower_checked;
    const Rational r = canonical_ratio(p, kp);
    if (r <= bounds.lower) report.violations.push_back("ratio " + r.str() + " not above lower bound at " + p.str());
  }

  const auto forms = poly::upper_linear_forms();
  const Assignment parallelogram{1, 1, k};
  report.parallelogram_on_both = forms[0].eval(parallelogram).is_zero() && forms[1].eval(parallelogram).is_zero();
  return report;
}

ExplorationReport empirical_extrema(const SampleSpec& spec, const Rational& k, unsigned workers, bool allow_zero) {
  if (!(k > Rational(-1) && (k.sign() < 0 || (allow_zero && k.is_zero())))) {
    throw Error(ErrorKind::DomainError, "exploration needs -1 < k < 0, got " + k.str());
  }
  const KParam kp = KParam::from_any(k);
  const auto samples = sample_omega(spec);
  const PQEvaluator pq;

  auto records = parallel_map(samples.size(), workers, [&](std::size_t i) {
    ExplorationRecord rec{samples[i], {}, false, false, false, {}, {}, {}};
    try {
      const CrosscutFigure fig = canonical_figure(samples[i], kp);
      rec.ratio = fig.ratio;
      rec.simple = fig.inner_simple;
      rec.inside = fig.inner_inside;
    } catch (const Error& e) {
      rec.parallel_failure = e.kind() == ErrorKind::ParallelLines;
      rec.failure = e.what();
    }
    rec.pq_ratio = pq(at(samples[i], k));
    if (rec.pq_ratio && rec.ratio) rec.pq_agrees = *rec.pq_ratio == *rec.ratio;
    return rec;
  });

  ExplorationReport report;
  report.k = k;
  for (const auto& rec : records) {
    if (rec.ratio) {
      track_extreme(*rec.ratio, rec.point, report.min_ratio, report.argmin, true);
      track_extreme(*rec.ratio, rec.point, report.max_ratio, report.argmax, false);
      report.simple_count += rec.simple ? 1 : 0;
      report.inside_count += rec.inside ? 1 : 0;
    } else {
      ++report.failures;
    }
    if (rec.pq_ratio) ++report.pq_defined;
    if (rec.pq_agrees.value_or(false)) ++report.pq_agreements;
  }
  report.records = std::move(records);
  return report;
}

std::vector<ScanRow> scan_k(const std::vector<Rational>& ks, const SampleSpec& spec, unsigned workers) {
  std::vector<ScanRow> rows;
  rows.reserve(ks.size());
  for (const Rational& k : ks) {
    ScanRow row;
    row.k = k;
    if (k.sign() > 0) {
      const BoundsReport r = verify_bounds(spec, k, workers);
      row.bounds = r.bounds;
      row.empirical_min = r.min_ratio;
      row.empirical_max = r.max_ratio;
      row.samples = r.samples_checked;
      row.equality_hits = r.equality_hits.size();
      row.violations = r.violations.size() + r.locus_mismatches.size() + r.oracle_mismatches.size();
    } else {
      const ExplorationReport r = empirical_extrema(spec, k, workers, /*allow_zero=*/true);
      row.empirical_min = r.min_ratio;
      row.empirical_max = r.max_ratio;
      row.samples = r.records.size() - r.failures;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace crosscut::verify
