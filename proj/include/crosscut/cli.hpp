#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "crosscut/crosscut.hpp"
#include "crosscut/geometry.hpp"
#include "crosscut/verifier.hpp"

namespace crosscut::cli {

using nlohmann::json;

/// A coordinate may be a JSON integer, a JSON float (taken as its exact
/// binary value), or a string holding "p/q", an integer or a decimal.
/// Throws std::invalid_argument.
Rational parse_rational(const json& value);

json to_json(const Rational& r);
json to_json(const Point& p);

/// Reads {"vertices": [[x, y], x4]}; each vertex may also be {"x":..,"y":..}.
/// A figure document is accepted too, through its "vertices" field.
Quadrilateral parse_quad_document(const json& doc);

/// Every rational is a "p/q" string. The "vertices" field makes the output
/// readable again as a quadrilateral document.
json figure_document(const json& input, const Quadrilateral& quad, const KParam& k);

json bounds_report_json(const verify::BoundsReport& report);
json exploration_json(const verify::ExplorationReport& report, const verify::SampleSpec& spec);

/// Header: k,lower,upper,empirical_min,empirical_max,samples,equality_hits.
std::string scan_csv(const std::vector<verify::ScanRow>& rows);

/// ABCD, the four cevian segments and KLMN, in a fixed 600x600 viewport.
/// Coordinates are printed with 6 decimals; output depends only on input.
std::string render_svg(const CrosscutFigure& figure);

/// Entry point for the command-line tool. Exit codes: 0 success, 1 failed
/// verification, 2 usage, parse or input-geometry errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crosscut::cli
