#include "crosscut/cli.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "crosscut/errors.hpp"
#include "crosscut/identities.hpp"

namespace crosscut::cli {

namespace {

constexpr std::array<std::string_view, 4> kVertexNames{"A", "B", "C", "D"};
constexpr std::array<std::string_view, 4> kDivisionNames{"A1", "B1", "C1", "D1"};

json points_json(const std::array<Point, 4>& pts, const std::array<std::string_view, 4>& names) {
  json out = json::object();
  for (std::size_t i = 0; i < 4; ++i) out[std::string(names[i])] = to_json(pts[i]);
  return out;
}

json params_json(const CanonicalParams& p) { return json::array({to_json(p.a()), to_json(p.b())}); }

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);  // no "-0.000000"
  return buf;
}

class CommandFailure : public std::runtime_error {
 public:
  CommandFailure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] int code() const noexcept { return code_; }

 private:
  int code_;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CommandFailure(2, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw CommandFailure(2, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw CommandFailure(2, "cannot write " + path);
  out << text;
}

Rational parse_cli_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw CommandFailure(2, flag + ": " + e.what());
  }
}

// Flags shared by every sampling subcommand.
struct SamplingFlags {
  std::string grid_step = "1/10";
  std::string box = "4";
  std::size_t random = 200;
  std::uint64_t seed = 1;
  unsigned long denominator_bound = 64;
  unsigned workers = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--grid-step", grid_step, "grid spacing (p/q)")->capture_default_str();
    cmd->add_option("--box", box, "sample box [0, box]^2 (p/q)")->capture_default_str();
    cmd->add_option("--random", random, "number of random samples")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    cmd->add_option("--denominator-bound", denominator_bound, "largest random denominator")->capture_default_str();
    cmd->add_option("--workers", workers, "worker threads")->capture_default_str();
  }

  [[nodiscard]] verify::SampleSpec spec() const {
    verify::SampleSpec s;
    s.grid_step = parse_cli_rational(grid_step, "--grid-step");
    s.box_max = parse_cli_rational(box, "--box");
    s.random_count = random;
    s.seed = seed;
    s.denominator_bound = denominator_bound;
    try {
      s.validate();
    } catch (const Error& e) {
      throw CommandFailure(2, e.what());
    }
    return s;
  }
};

std::string points_list(const std::vector<CanonicalParams>& pts, std::size_t limit = 6) {
  std::string out;
  for (std::size_t i = 0; i < pts.size() && i < limit; ++i) out += (i ? " " : "") + pts[i].str();
  if (pts.size() > limit) out += " ... (" + std::to_string(pts.size()) + " points)";
  return out;
}

std::vector<Rational> parse_k_list(const std::string& text) {
  std::vector<Rational> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) ks.push_back(parse_cli_rational(item, "--ks"));
  if (ks.empty()) throw CommandFailure(2, "--ks: empty list");
  return ks;
}

}  // namespace

Rational parse_rational(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational::parse(std::to_string(value.get<std::uint64_t>()))
                                      : Rational::parse(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_number_float()) return Rational::from_double(value.get<double>());
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  throw std::invalid_argument("expected a number or a rational string, got " + value.dump());
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

Quadrilateral parse_quad_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices")) throw std::invalid_argument("document has no \"vertices\" field");
  const json& vs = doc.at("vertices");
  if (!vs.is_array() || vs.size() != 4) throw std::invalid_argument("\"vertices\" must list exactly 4 points");
  std::array<Point, 4> pts;
  for (std::size_t i = 0; i < 4; ++i) {
    const json& v = vs[i];
    if (v.is_array() && v.size() == 2) {
      pts[i] = {parse_rational(v[0]), parse_rational(v[1])};
    } else if (v.is_object() && v.contains("x") && v.contains("y")) {
      pts[i] = {parse_rational(v.at("x")), parse_rational(v.at("y"))};
    } else {
      throw std::invalid_argument("vertex " + std::string(kVertexNames[i]) + " must be [x, y] or {\"x\":..,\"y\":..}");
    }
  }
  return Quadrilateral(pts);
}

json figure_document(const json& input, const Quadrilateral& quad, const KParam& k) {
  const CanonicalFrame frame = canonicalize(quad);
  const CrosscutFigure fig = crosscut_figure(quad, k);
  json doc;
  doc["input"] = input;
  doc["vertices"] = json::array();
  for (const Point& p : fig.vertices) doc["vertices"].push_back(to_json(p));
  doc["k"] = to_json(k.value());
  doc["canonical"] = {{"a", to_json(frame.params.a())}, {"b", to_json(frame.params.b())}, {"rotation", frame.rotation}};
  doc["division_points"] = points_json(fig.division_points, kDivisionNames);
  doc["lines"] = json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    const Line& l = fig.lines[i];
    doc["lines"][std::string(kLineNames[i])] = {{"p", to_json(l.p())}, {"q", to_json(l.q())}, {"r", to_json(l.r())}};
  }
  doc["inner"] = points_json(fig.inner, kInnerNames);
  doc["S"] = to_json(fig.S);
  doc["s"] = to_json(fig.s);
  doc["ratio"] = to_json(fig.ratio);
  doc["inner_inside"] = fig.inner_inside;
  doc["inner_simple"] = fig.inner_simple;
  if (k.positive()) {
    const RatioBounds b = theorem_bounds(k.value());
    doc["bounds"] = {{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}};
    doc["equality"] = {{"lower", fig.ratio == b.lower}, {"upper", fig.ratio == b.upper}};
  } else {
    doc["bounds"] = nullptr;
    doc["equality"] = nullptr;
  }
  return doc;
}

json bounds_report_json(const verify::BoundsReport& r) {
  const auto issues = [](const std::vector<verify::SampleIssue>& list) {
    json out = json::array();
    for (const auto& i : list) out.push_back({{"point", params_json(i.point)}, {"ratio", to_json(i.ratio)}, {"what", i.what}});
    return out;
  };
  const auto points = [](const std::vector<CanonicalParams>& list) {
    json out = json::array();
    for (const auto& p : list) out.push_back(params_json(p));
    return out;
  };
  json hits = json::array();
  for (const auto& h : r.equality_hits) {
    hits.push_back({{"point", params_json(h.point)}, {"bound", h.side == verify::BoundSide::Lower ? "lower" : "upper"}});
  }
  return {
      {"k", to_json(r.k)},
      {"bounds", {{"lower", to_json(r.bounds.lower)}, {"upper", to_json(r.bounds.upper)}}},
      {"samples_checked", r.samples_checked},
      {"violations", issues(r.violations)},
      {"locus_mismatches", issues(r.locus_mismatches)},
      {"oracle_mismatches", issues(r.oracle_mismatches)},
      {"min_ratio", to_json(r.min_ratio)},
      {"argmin", points(r.argmin)},
      {"max_ratio", to_json(r.max_ratio)},
      {"argmax", points(r.argmax)},
      {"equality_hits", hits},
      {"ok", r.ok()},
  };
}

json exploration_json(const verify::ExplorationReport& r, const verify::SampleSpec& spec) {
  json records = json::array();
  for (const auto& rec : r.records) {
    json j{{"a", to_json(rec.point.a())}, {"b", to_json(rec.point.b())}};
    j["ratio"] = rec.ratio ? json(to_json(*rec.ratio)) : json(nullptr);
    j["simple"] = rec.simple;
    j["inner_inside"] = rec.inside;
    j["parallel_failure"] = rec.parallel_failure;
    if (!rec.failure.empty()) j["failure"] = rec.failure;
    j["pq_ratio"] = rec.pq_ratio ? json(to_json(*rec.pq_ratio)) : json(nullptr);
    j["pq_agrees"] = rec.pq_agrees ? json(*rec.pq_agrees) : json(nullptr);
    records.push_back(std::move(j));
  }
  const auto opt = [](const std::optional<Rational>& v) { return v ? json(to_json(*v)) : json(nullptr); };
  json argmin = json::array();
  for (const auto& p : r.argmin) argmin.push_back(params_json(p));
  json argmax = json::array();
  for (const auto& p : r.argmax) argmax.push_back(params_json(p));
  return {
      {"label", verify::ExplorationReport::kLabel},
      {"k", to_json(r.k)},
      {"sampling",
       {{"seed", spec.seed},
        {"grid_step", to_json(spec.grid_step)},
        {"box", to_json(spec.box_max)},
        {"random", spec.random_count},
        {"denominator_bound", spec.denominator_bound}}},
      {"samples", r.records.size()},
      {"empirical_min", opt(r.min_ratio)},
      {"argmin", argmin},
      {"empirical_max", opt(r.max_ratio)},
      {"argmax", argmax},
      {"failures", r.failures},
      {"simple_count", r.simple_count},
      {"inside_count", r.inside_count},
      {"pq_defined", r.pq_defined},
      {"pq_agreements", r.pq_agreements},
      {"records", records},
  };
}

std::string scan_csv(const std::vector<verify::ScanRow>& rows) {
  std::string out = "k,lower,upper,empirical_min,empirical_max,samples,equality_hits\n";
  const auto opt = [](const std::optional<Rational>& v) { return v ? v->str() : std::string(); };
  for (const auto& row : rows) {
    out += row.k.str() + ",";
    out += (row.bounds ? row.bounds->lower.str() : "") + ",";
    out += (row.bounds ? row.bounds->upper.str() : "") + ",";
    out += opt(row.empirical_min) + "," + opt(row.empirical_max) + ",";
    out += std::to_string(row.samples) + "," + std::to_string(row.equality_hits) + "\n";
  }
  return out;
}

std::string render_svg(const CrosscutFigure& fig) {
  constexpr double kSize = 600.0;
  constexpr double kMargin = 30.0;
  struct XY {
    double x, y;
  };
  const auto d = [](const Point& p) { return XY{p.x.to_double(), p.y.to_double()}; };

  std::vector<XY> all;
  for (const auto* set : {&fig.vertices, &fig.division_points, &fig.inner}) {
    for (const Point& p : *set) all.push_back(d(p));
  }
  double min_x = all[0].x, max_x = all[0].x, min_y = all[0].y, max_y = all[0].y;
  for (const XY& p : all) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, std::numeric_limits<double>::min()});
  const double scale = (kSize - 2 * kMargin) / span;
  const auto sx = [&](double x) { return fmt6(kMargin + (x - min_x) * scale); };
  const auto sy = [&](double y) { return fmt6(kSize - kMargin - (y - min_y) * scale); };
  const auto polygon = [&](const std::array<Point, 4>& pts, const char* style) {
    std::string s = "  <polygon points=\"";
    for (std::size_t i = 0; i < 4; ++i) s += (i ? " " : "") + sx(d(pts[i]).x) + "," + sy(d(pts[i]).y);
    return s + "\" " + style + "/>\n";
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  svg += "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  svg += polygon(fig.inner, "fill=\"#cfe3f7\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"");
  svg += polygon(fig.vertices, "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");
  // Each cevian is drawn over the extent of its vertex, division point and
  // the two inner vertices it carries.
  for (std::size_t i = 0; i < 4; ++i) {
    const XY origin = d(fig.vertices[i]);
    const XY target = d(fig.division_points[(i + 1) % 4]);
    const XY dir{target.x - origin.x, target.y - origin.y};
    const double len2 = dir.x * dir.x + dir.y * dir.y;
    double t_min = 0.0, t_max = 1.0;
    for (const Point& p : {fig.inner[i], fig.inner[(i + 1) % 4]}) {
      const XY q = d(p);
      const double t = len2 > 0 ? ((q.x - origin.x) * dir.x + (q.y - origin.y) * dir.y) / len2 : 0.0;
      t_min = std::min(t_min, t);
      t_max = std::max(t_max, t);
    }
    svg += "  <line x1=\"" + sx(origin.x + t_min * dir.x) + "\" y1=\"" + sy(origin.y + t_min * dir.y) + "\" x2=\"" +
           sx(origin.x + t_max * dir.x) + "\" y2=\"" + sy(origin.y + t_max * dir.y) +
           "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  }
  const auto label = [&](const Point& p, std::string_view name, const char* color) {
    const XY q = d(p);
    return "  <circle cx=\"" + sx(q.x) + "\" cy=\"" + sy(q.y) + "\" r=\"3\" fill=\"" + color + "\"/>\n" +
           "  <text x=\"" + sx(q.x) + "\" y=\"" + sy(q.y) + "\" dx=\"5\" dy=\"-5\" font-size=\"14\" fill=\"" + color +
           "\">" + std::string(name) + "</text>\n";
  };
  for (std::size_t i = 0; i < 4; ++i) svg += label(fig.vertices[i], kVertexNames[i], "black");
  for (std::size_t i = 0; i < 4; ++i) svg += label(fig.division_points[i], kDivisionNames[i], "#666666");
  for (std::size_t i = 0; i < 4; ++i) svg += label(fig.inner[i], kInnerNames[i], "#1f5fa8");
  svg += "</svg>\n";
  return svg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact crosscut quadrilaterals: construction, area ratios and bound verification", "crosscut"};
  app.require_subcommand(1);

  std::string k_text;
  std::string input_path, svg_path, output_path;
  auto* construct = app.add_subcommand("construct", "build KLMN for a quadrilateral read from JSON");
  construct->add_option("--input", input_path, "quadrilateral JSON file")->required();
  construct->add_option("--k", k_text, "ratio parameter k > -1 (p/q)")->required();
  construct->add_option("--svg", svg_path, "write an SVG drawing here");
  construct->add_option("--output", output_path, "write the figure JSON here instead of stdout");

  std::string canonical_text;
  auto* ratio = app.add_subcommand("ratio", "exact s/S for the canonical quadrilateral (0,0),(0,1),(a,b),(1,0)");
  ratio->add_option("--canonical", canonical_text, "a,b")->required();
  ratio->add_option("--k", k_text, "ratio parameter k > -1 (p/q)")->required();

  bool screen_only = false;
  auto* identities = app.add_subcommand("verify-identities", "check the polynomial identities by full expansion");
  identities->add_flag("--screen-only", screen_only, "only evaluate at 1000 random points");

  SamplingFlags bounds_flags;
  std::string json_path;
  auto* bounds = app.add_subcommand("verify-bounds", "check lower <= s/S <= upper over sampled quadrilaterals");
  bounds->add_option("--k", k_text, "k > 0 (p/q)")->required();
  bounds->add_option("--json", json_path, "write the full report here");
  bounds_flags.attach(bounds);

  SamplingFlags scan_flags;
  std::string ks_text, from_text, to_text, step_text, csv_path;
  auto* scan = app.add_subcommand("scan-k", "bounds and empirical extrema for several k");
  auto* ks_opt = scan->add_option("--ks", ks_text, "comma-separated k values");
  auto* from_opt = scan->add_option("--from", from_text, "first k of a range");
  scan->add_option("--to", to_text, "last k of a range")->needs(from_opt);
  scan->add_option("--step", step_text, "range step")->needs(from_opt);
  ks_opt->excludes(from_opt);
  scan->add_option("--csv", csv_path, "write the table here as well");
  scan_flags.attach(scan);

  SamplingFlags explore_flags;
  auto* explore = app.add_subcommand("explore", "empirical s/S for -1 < k < 0 (no proven bounds)");
  explore->add_option("--k", k_text, "-1 < k < 0 (p/q)")->required();
  explore->add_option("--json", json_path, "write the full report here");
  explore_flags.attach(explore);

  std::vector<std::string> argv_storage{"crosscut"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) {
      const json input = read_json_file(input_path);
      Quadrilateral quad = [&] {
        try {
          return parse_quad_document(input);
        } catch (const std::invalid_argument& e) {
          throw CommandFailure(2, input_path + ": " + e.what());
        }
      }();
      const KParam k = KParam::from_any(parse_cli_rational(k_text, "--k"));
      const json doc = figure_document(input, quad, k);
      if (output_path.empty()) {
        out << doc.dump(2) << "\n";
      } else {
        write_file(output_path, doc.dump(2) + "\n");
        out << "ratio " << doc["ratio"].get<std::string>() << "\n";
      }
      if (!svg_path.empty()) write_file(svg_path, render_svg(crosscut_figure(quad, k)));
      return 0;
    }

    if (ratio->parsed()) {
      const auto comma = canonical_text.find(',');
      if (comma == std::string::npos) throw CommandFailure(2, "--canonical expects a,b");
      const CanonicalParams params(parse_cli_rational(canonical_text.substr(0, comma), "--canonical"),
                                   parse_cli_rational(canonical_text.substr(comma + 1), "--canonical"));
      const KParam k = KParam::from_any(parse_cli_rational(k_text, "--k"));
      out << canonical_ratio(params, k).str() << "\n";
      return 0;
    }

    if (identities->parsed()) {
      std::vector<poly::PolyIdentity> list{poly::ratio_identity(), poly::lower_identity(), poly::upper_identity()};
      bool all_pass = true;
      const auto report = [&](const std::string& name, bool passed, const std::string& detail) {
        all_pass = all_pass && passed;
        out << (passed ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : "  [" + detail + "]") << "\n";
      };
      if (screen_only) {
        for (const auto& rw : poly::rewrite_identities()) list.push_back(rw);
        for (const auto& id : list) {
          const auto s = poly::screen(id, 1000, 1);
          report(id.name + " (1000 random points)", s.passed, s.passed ? "" : "differs at " + s.counterexample);
        }
        return all_pass ? 0 : 1;
      }
      for (const auto& id : list) {
        const auto v = poly::check(id);
        report(v.name, v.passed, v.passed ? "" : "first differing monomial " + v.first_difference);
      }
      const auto rewrites = poly::check_rewrites();
      std::string failed;
      for (const auto& v : rewrites) {
        if (!v.passed) failed += (failed.empty() ? "" : "; ") + v.name + " at " + v.first_difference;
      }
      report("rewrites (" + std::to_string(rewrites.size()) + " sub-identities)", failed.empty(), failed);
      return all_pass ? 0 : 1;
    }

    if (bounds->parsed()) {
      const Rational k = parse_cli_rational(k_text, "--k");
      if (k.sign() <= 0) throw CommandFailure(2, "--k must be positive for verify-bounds");
      const auto r = verify::verify_bounds(bounds_flags.spec(), k, bounds_flags.workers);
      out << "k " << r.k << "\n"
          << "bounds [" << r.bounds.lower << ", " << r.bounds.upper << "]\n"
          << "samples " << r.samples_checked << "\n"
          << "min " << r.min_ratio << " at " << points_list(r.argmin) << "\n"
          << "max " << r.max_ratio << " at " << points_list(r.argmax) << "\n"
          << "equality hits " << r.equality_hits.size() << "\n"
          << "violations " << r.violations.size() << ", locus mismatches " << r.locus_mismatches.size()
          << ", oracle mismatches " << r.oracle_mismatches.size() << "\n"
          << (r.ok() ? "PASS" : "FAIL") << "\n";
      if (!json_path.empty()) write_file(json_path, bounds_report_json(r).dump(2) + "\n");
      return r.ok() ? 0 : 1;
    }

    if (scan->parsed()) {
      std::vector<Rational> ks;
      if (!ks_text.empty()) {
        ks = parse_k_list(ks_text);
      } else if (!from_text.empty()) {
        if (to_text.empty() || step_text.empty()) throw CommandFailure(2, "--from needs --to and --step");
        const Rational from = parse_cli_rational(from_text, "--from");
        const Rational to = parse_cli_rational(to_text, "--to");
        const Rational step = parse_cli_rational(step_text, "--step");
        if (step.sign() <= 0) throw CommandFailure(2, "--step must be positive");
        for (Rational k = from; k <= to; k += step) ks.push_back(k);
      } else {
        throw CommandFailure(2, "scan-k needs --ks or --from/--to/--step");
      }
      for (const Rational& k : ks) {
        if (k <= Rational(-1)) throw CommandFailure(2, "every k must exceed -1, got " + k.str());
      }
      const auto rows = verify::scan_k(ks, scan_flags.spec(), scan_flags.workers);
      const std::string csv = scan_csv(rows);
      out << csv;
      if (!csv_path.empty()) write_file(csv_path, csv);
      std::size_t bad = 0;
      for (const auto& row : rows) bad += row.violations;
      return bad == 0 ? 0 : 1;
    }

    if (explore->parsed()) {
      const Rational k = parse_cli_rational(k_text, "--k");
      if (!(k > Rational(-1) && k.sign() < 0)) throw CommandFailure(2, "--k must lie in (-1, 0)");
      const verify::SampleSpec spec = explore_flags.spec();
      const auto r = verify::empirical_extrema(spec, k, explore_flags.workers);
      out << verify::ExplorationReport::kLabel << ": empirical values only, not proven bounds\n"
          << "k " << r.k << "\n"
          << "samples " << r.records.size() << " (grid step " << spec.grid_step << ", box " << spec.box_max
          << ", random " << spec.random_count << ", seed " << spec.seed << ")\n";
      for (const auto& rec : r.records) {
        if (rec.point == CanonicalParams(1, 1) && rec.ratio) out << "ratio at (1,1) " << *rec.ratio << "\n";
      }
      out << "empirical min " << (r.min_ratio ? r.min_ratio->str() : "n/a") << " at " << points_list(r.argmin) << "\n"
          << "empirical max " << (r.max_ratio ? r.max_ratio->str() : "n/a") << " at " << points_list(r.argmax) << "\n"
          << "construction failures " << r.failures << "\n"
          << "simple KLMN " << r.simple_count << ", KLMN inside ABCD " << r.inside_count << "\n"
          << "P/Q defined " << r.pq_defined << ", agrees with geometry " << r.pq_agreements << "\n";
      if (!json_path.empty()) write_file(json_path, exploration_json(r, spec).dump(2) + "\n");
      return 0;
    }
  } catch (const CommandFailure& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool verification = e.kind() == ErrorKind::IdentityFailed || e.kind() == ErrorKind::LocusViolation;
    return verification ? 1 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace crosscut::cli
