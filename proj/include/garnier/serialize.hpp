// JSON round trips for the chart and bundle data. Every scalar travels
// as an exact "p/q" string; nothing ever passes through floating point.
#pragma once

#include "garnier/connection.hpp"
#include "garnier/parabolic.hpp"
#include "garnier/projpoint.hpp"
#include "garnier/rational.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace garnier {

using Json = nlohmann::json;

Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json rat_list_json(const std::vector<Rat>& v);
std::vector<Rat> rat_list_from_json(const Json& j);

// Comma-separated exact scalars, as used by the command-line flags.
std::vector<Rat> parse_rat_csv(const std::string& s);

Json point_json(const ProjPoint& p);

// {n, t, nu: [plus, minus], u, lambda, c, frame: "deg0"|"deg-1"}
Json chart_json(const ConnectionChart<Rat>& chart);
ConnectionChart<Rat> chart_from_json(const Json& j);

// {e: [e1, e2], dirs: [[x, y], ...]}
Json bundle_json(const ParabolicBundle& b);
ParabolicBundle bundle_from_json(const Json& j);

// {w: [...]}
Json weights_json(const Weights& w);
Weights weights_from_json(const Json& j);

// {nu: [plus, minus], d}
Json spectral_json(const SpectralData& sd);
SpectralData spectral_from_json(const Json& j);

// {d, k, I1} with 1-based sorted indices.
Json wall_json(const Wall& w);

}  // namespace garnier
