#include "garnier/serialize.hpp"

#include <stdexcept>

namespace garnier {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("scalar must be a \"p/q\" string");
  return rat_from_string(j.get<std::string>());
}

Json rat_list_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(rat_json(x));
  return out;
}

std::vector<Rat> rat_list_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("scalar list must be an array");
  std::vector<Rat> out;
  for (const Json& x : j) out.push_back(rat_from_json(x));
  return out;
}

std::vector<Rat> parse_rat_csv(const std::string& s) {
  std::vector<Rat> out;
  if (s.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    out.push_back(rat_from_string(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Json point_json(const ProjPoint& p) { return rat_list_json(p.coords()); }

Json chart_json(const ConnectionChart<Rat>& chart) {
  Json j;
  j["n"] = chart.n();
  j["t"] = rat_list_json(chart.t);
  j["nu"] = Json::array({rat_list_json(chart.nu_plus), rat_list_json(chart.nu_minus)});
  j["u"] = rat_list_json(chart.u);
  j["lambda"] = rat_json(chart.lambda);
  j["c"] = rat_list_json(chart.c);
  j["frame"] = chart.frame == Frame::Deg0 ? "deg0" : "deg-1";
  return j;
}

ConnectionChart<Rat> chart_from_json(const Json& j) {
  ConnectionChart<Rat> chart;
  chart.t = rat_list_from_json(j.at("t"));
  chart.nu_plus = rat_list_from_json(j.at("nu").at(0));
  chart.nu_minus = rat_list_from_json(j.at("nu").at(1));
  chart.u = rat_list_from_json(j.at("u"));
  chart.c = rat_list_from_json(j.at("c"));
  chart.lambda = rat_from_json(j.at("lambda"));
  std::string frame = j.value("frame", "deg-1");
  if (frame == "deg0")
    chart.frame = Frame::Deg0;
  else if (frame == "deg-1")
    chart.frame = Frame::DegMinus1;
  else
    throw std::invalid_argument("frame must be deg0 or deg-1");
  if (j.contains("n") && j.at("n").get<int>() != chart.n())
    throw std::invalid_argument("declared n disagrees with the exponent lists");
  chart.validate();
  return chart;
}

Json bundle_json(const ParabolicBundle& b) {
  Json j;
  j["e"] = Json::array({b.e1, b.e2});
  Json dirs = Json::array();
  for (const ProjPoint& p : b.l) dirs.push_back(point_json(p));
  j["dirs"] = dirs;
  return j;
}

ParabolicBundle bundle_from_json(const Json& j) {
  const Json& e = j.at("e");
  std::vector<ProjPoint> dirs;
  for (const Json& p : j.at("dirs")) {
    std::vector<Rat> xy = rat_list_from_json(p);
    if (xy.size() != 2) throw std::invalid_argument("directions are coordinate pairs");
    dirs.push_back(ProjPoint(xy));
  }
  return ParabolicBundle(e.at(0).get<int>(), e.at(1).get<int>(), std::move(dirs));
}

Json weights_json(const Weights& w) { return Json{{"w", rat_list_json(w.w)}}; }

Weights weights_from_json(const Json& j) { return Weights(rat_list_from_json(j.at("w"))); }

Json spectral_json(const SpectralData& sd) {
  Json j;
  std::vector<Rat> plus, minus;
  for (int i = 0; i < sd.n(); ++i) {
    plus.push_back(sd.nu_plus(i));
    minus.push_back(sd.nu_minus(i));
  }
  j["nu"] = Json::array({rat_list_json(plus), rat_list_json(minus)});
  j["d"] = sd.degree();
  return j;
}

SpectralData spectral_from_json(const Json& j) {
  return SpectralData(rat_list_from_json(j.at("nu").at(0)), rat_list_from_json(j.at("nu").at(1)),
                      j.at("d").get<int>());
}

Json wall_json(const Wall& w) {
  Json j;
  j["d"] = w.d;
  j["k"] = w.k;
  // 1-based pole indices on the wire.
  Json idx = Json::array();
  for (int i : w.I1) idx.push_back(i + 1);
  j["I1"] = idx;
  return j;
}

}  // namespace garnier
