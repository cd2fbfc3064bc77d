#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "crosscut/crosscut.hpp"
#include "crosscut/errors.hpp"
#include "crosscut/verifier.hpp"
#include "oracles.hpp"

using namespace crosscut;
using namespace crosscut::verify;

namespace {

SampleSpec small_spec(std::size_t random = 40) {
  SampleSpec s;
  s.grid_step = Rational(1, 4);
  s.box_max = Rational(3);
  s.random_count = random;
  s.denominator_bound = 16;
  return s;
}

bool contains(const std::vector<CanonicalParams>& v, const CanonicalParams& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST_CASE("sample_omega") {
  SUBCASE("coarse grid, listed in order") {
    SampleSpec s;
    s.grid_step = Rational(1, 2);
    s.box_max = Rational(1);
    s.random_count = 0;
    const Rational h(1, 2);
    const std::vector<CanonicalParams> want{{0, 1}, {h, h}, {h, 1}, {1, 0}, {1, h}, {1, 1}};
    CHECK(sample_omega(s) == want);
  }
  SUBCASE("mandatory points, no duplicates, all in the domain") {
    const auto pts = sample_omega(small_spec());
    CHECK(contains(pts, {1, 0}));
    CHECK(contains(pts, {0, 1}));
    CHECK(contains(pts, {1, 1}));
    std::set<std::string> seen;
    for (const auto& p : pts) {
      CHECK(CanonicalParams::in_domain(p.a(), p.b()));
      CHECK(seen.insert(p.str()).second);
    }
  }
  SUBCASE("extras") {
    SampleSpec s = small_spec(0);
    s.extra_points.emplace_back(Rational(17, 3), Rational(2, 7));
    CHECK(sample_omega(s).back() == CanonicalParams(Rational(17, 3), Rational(2, 7)));
    s.extra_points.emplace_back(Rational(1, 3), Rational(1, 3));
    CHECK_THROWS_AS(sample_omega(s), Error);
  }
  SUBCASE("validation") {
    SampleSpec s;
    s.grid_step = Rational(0);
    CHECK_THROWS_AS(s.validate(), Error);
    s = SampleSpec{};
    s.box_max = Rational(1, 2);
    CHECK_THROWS_AS(s.validate(), Error);
    s = SampleSpec{};
    s.denominator_bound = 0;
    CHECK_THROWS_AS(s.validate(), Error);
  }
  SUBCASE("determinism") {
    CHECK(sample_omega(small_spec()) == sample_omega(small_spec()));
    SampleSpec other = small_spec();
    other.seed = 99;
    CHECK(sample_omega(other) != sample_omega(small_spec()));
  }
}

TEST_CASE("verify_bounds at k = 1") {
  const BoundsReport r = verify_bounds(small_spec(), 1);
  CHECK(r.ok());
  CHECK(r.bounds.lower == Rational(1, 6));
  CHECK(r.bounds.upper == Rational(1, 5));
  CHECK(r.min_ratio == Rational(1, 6));
  CHECK(r.max_ratio == Rational(1, 5));
  CHECK(r.argmin.size() == 2);
  CHECK(contains(r.argmin, {0, 1}));
  CHECK(contains(r.argmin, {1, 0}));
  CHECK(contains(r.argmax, {1, 1}));
  // Every maximiser lies on one of the two lines through (1, 1).
  for (const auto& p : r.argmax) {
    CHECK((Rational(2) * p.a() == p.b() + Rational(1) || p.a() == Rational(3) - Rational(2) * p.b()));
  }
  CHECK(r.equality_hits.size() == r.argmin.size() + r.argmax.size());
  CHECK(r.samples_checked == sample_omega(small_spec()).size());
}

TEST_CASE("verify_bounds for other k") {
  for (const Rational& k : {Rational(1, 3), Rational(2), Rational(5)}) {
    const BoundsReport r = verify_bounds(small_spec(20), k);
    INFO(k.str());
    CHECK(r.ok());
    CHECK(r.min_ratio == r.bounds.lower);
    CHECK(r.max_ratio <= r.bounds.upper);
    CHECK(r.min_ratio >= r.bounds.lower);
  }
  CHECK_THROWS_AS(verify_bounds(small_spec(), 0), Error);
}

TEST_CASE("property: worker count does not change the report") {
  const SampleSpec s = small_spec(60);
  const BoundsReport one = verify_bounds(s, Rational(3, 2), 1);
  const BoundsReport three = verify_bounds(s, Rational(3, 2), 3);
  CHECK(one.samples_checked == three.samples_checked);
  CHECK(one.min_ratio == three.min_ratio);
  CHECK(one.max_ratio == three.max_ratio);
  CHECK(one.argmin == three.argmin);
  CHECK(one.argmax == three.argmax);
  CHECK(one.equality_hits.size() == three.equality_hits.size());
}

TEST_CASE("equality loci") {
  SUBCASE("documented points at k = 1") {
    CHECK(canonical_ratio({Rational(3, 2), 2}, KParam::from_segment_ratio(1)) == Rational(1, 5));
    CHECK(canonical_ratio({2, Rational(1, 2)}, KParam::from_segment_ratio(1)) == Rational(1, 5));
  }
  for (const Rational& k : {Rational(1, 2), Rational(1), Rational(4)}) {
    const LocusReport r = equality_locus_check(k, 8, small_spec(20));
    INFO(k.str());
    CHECK(r.ok());
    CHECK(r.upper_line1.size() == 8);
    CHECK(r.upper_line2.size() == 8);
    CHECK(r.strict_lower_checked > 0);
    CHECK_NOTHROW(r.require());
    for (const auto& p : r.upper_line1) CHECK((p.b() * k + Rational(1) - p.a() - p.a() * k).is_zero());
    for (const auto& p : r.upper_line2) CHECK((p.b() + p.b() * k - Rational(1) + p.a() * k - Rational(2) * k).is_zero());
  }
  LocusReport broken;
  broken.violations.push_back("synthetic");
  broken.parallelogram_on_both = true;
  CHECK_THROWS_AS(broken.require(), Error);
}

TEST_CASE("exploration for k in (-1, 0)") {
  SUBCASE("k = 0 is the identity construction") {
    const ExplorationReport r = empirical_extrema(small_spec(), 0, 1, true);
    REQUIRE(r.min_ratio);
    CHECK(*r.min_ratio == Rational(1));
    CHECK(*r.max_ratio == Rational(1));
    // Only (1,0) and (0,1), where a side collapses to a point.
    CHECK(r.failures == 2);
    for (const auto& rec : r.records) CHECK((rec.ratio.has_value() != on_lower_locus(rec.point)));
    CHECK_THROWS_AS(empirical_extrema(small_spec(), 0), Error);
  }
  SUBCASE("k = -1/2") {
    const ExplorationReport r = empirical_extrema(small_spec(), Rational(-1, 2));
    CHECK(std::string(ExplorationReport::kLabel) == "CONJECTURAL");
    const auto it = std::find_if(r.records.begin(), r.records.end(),
                                 [](const ExplorationRecord& x) { return x.point == CanonicalParams(1, 1); });
    REQUIRE(it != r.records.end());
    REQUIRE(it->ratio);
    CHECK(*it->ratio == Rational(2));
    REQUIRE(it->pq_ratio);
    CHECK(*it->pq_ratio == Rational(2));
    CHECK(it->pq_agrees == true);
    CHECK(r.pq_agreements <= r.pq_defined);
    CHECK(r.failures <= r.records.size());
    std::size_t failed = 0;
    for (const auto& rec : r.records) {
      failed += rec.ratio ? 0 : 1;
      if (!rec.ratio) CHECK_FALSE(rec.failure.empty());
    }
    CHECK(failed == r.failures);
  }
  SUBCASE("deterministic") {
    const auto x = empirical_extrema(small_spec(), Rational(-1, 3));
    const auto y = empirical_extrema(small_spec(), Rational(-1, 3), 2);
    CHECK(x.min_ratio == y.min_ratio);
    CHECK(x.max_ratio == y.max_ratio);
    CHECK(x.failures == y.failures);
    CHECK(x.pq_agreements == y.pq_agreements);
  }
  CHECK_THROWS_AS(empirical_extrema(small_spec(), Rational(-1)), Error);
  CHECK_THROWS_AS(empirical_extrema(small_spec(), Rational(1)), Error);
}

TEST_CASE("scan_k") {
  const std::vector<Rational> ks{Rational(-1, 2), 0, Rational(1, 2), 1, 2, 5};
  const auto rows = scan_k(ks, small_spec(10));
  REQUIRE(rows.size() == ks.size());
  CHECK_FALSE(rows[0].bounds);
  CHECK_FALSE(rows[1].bounds);
  CHECK(*rows[1].empirical_min == Rational(1));
  CHECK(*rows[1].empirical_max == Rational(1));
  for (std::size_t i = 2; i < rows.size(); ++i) {
    REQUIRE(rows[i].bounds);
    CHECK(rows[i].bounds->lower == theorem_bounds(ks[i]).lower);
    CHECK(rows[i].bounds->upper == theorem_bounds(ks[i]).upper);
    CHECK(rows[i].violations == 0);
    CHECK(*rows[i].empirical_min == rows[i].bounds->lower);
    CHECK(*rows[i].empirical_max == rows[i].bounds->upper);
    if (i > 2) CHECK(rows[i].bounds->upper < rows[i - 1].bounds->upper);
  }
}
