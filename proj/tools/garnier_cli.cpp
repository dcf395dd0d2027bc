// Command-line surface for the chart/bundle library: JSON in, JSON out,
// every scalar an exact "p/q" string. Exit codes: 0 success, 1 domain
// error, 2 verification-suite failure, 64 malformed input.
#include "CLI11.hpp"

#include "garnier/connection.hpp"
#include "garnier/delpezzo.hpp"
#include "garnier/maps.hpp"
#include "garnier/parabolic.hpp"
#include "garnier/serialize.hpp"
#include "garnier/transforms.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace garnier;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitSuite = 2;
constexpr int kExitUsage = 64;

struct SuiteFailure : std::runtime_error {
  Json counterexample;
  SuiteFailure(const std::string& what, Json cx)
      : std::runtime_error(what), counterexample(std::move(cx)) {}
};

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(uint64_t seed) : rng(seed) {}
  Rat rat() { return Rat((int)(rng() % 21) - 10, (int)(rng() % 6) + 1); }
  Rat nonzero() {
    Rat r = rat();
    return r == 0 ? Rat(1, 3) : r;
  }
  std::vector<Rat> custom_poles(int m) {
    std::vector<Rat> t;
    while ((int)t.size() < m) {
      Rat x = rat();
      bool ok = x != 0 && x != 1;
      for (const Rat& y : t) ok = ok && x != y;
      if (ok) t.push_back(x);
    }
    return t;
  }
};

// Inline JSON text, or a path to a file holding it.
Json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open input file: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return Json::parse(text);
}

// "p1,..,pn;m1,..,mn" in degree -1 labels; the degree comes out of the
// trace relation.
SpectralData spectral_from_flag(const std::string& nu, int n) {
  size_t semi = nu.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("--nu wants \"plus-list;minus-list\"");
  std::vector<Rat> plus = parse_rat_csv(nu.substr(0, semi));
  std::vector<Rat> minus = parse_rat_csv(nu.substr(semi + 1));
  if ((int)plus.size() != n || (int)minus.size() != n)
    throw std::invalid_argument("--nu lists must have length n");
  Rat s = 0;
  for (const Rat& x : plus) s += x;
  for (const Rat& x : minus) s += x;
  if (!is_integer(s)) throw std::invalid_argument("exponent sum must be an integer");
  return SpectralData(std::move(plus), std::move(minus), -(int)numerator(s));
}

// Default spectral data: rho = 1 in the degree -1 frame.
SpectralData default_spectral(int n) {
  std::vector<Rat> plus(n, Rat(0)), minus(n, Rat(0));
  minus[0] = 1;
  return SpectralData(std::move(plus), std::move(minus), -1);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Verification suites.
// ---------------------------------------------------------------------------

void suite_n4(uint64_t seed, int samples) {
  Gen gen(seed);
  int done = 0;
  while (done < samples) {
    Rat t = gen.custom_poles(1)[0];
    Rat rho = gen.nonzero(), u = gen.rat(), c = gen.rat();
    Json cx = {{"t", rat_to_string(t)},
               {"rho", rat_to_string(rho)},
               {"u", rat_to_string(u)},
               {"c", rat_to_string(c)}};
    Rat p, q;
    try {
      std::tie(p, q) = n4_forward(t, rho, u, c);
    } catch (const std::domain_error&) {
      continue;
    }
    auto [u2, c2] = n4_inverse(t, rho, p, q);
    if (u2 != u || c2 != c) throw SuiteFailure("n4 closed forms do not round trip", cx);
    if (p != 0 && u != t && q + rho / p != mu_map(t, u))
      throw SuiteFailure("n4 mu identity fails", cx);
    // The 2-form check needs a generic apparent root, away from the
    // poles where the (q, u) coordinates degenerate.
    Rat qs = gen.rat();
    if (qs != t && qs != 0 && qs != 1) {
      try {
        if (!symplectic_check<Rat>({t}, rho, {qs}, {u}))
          throw SuiteFailure("n4 symplectic identity fails", cx);
      } catch (const std::domain_error&) {
        // degenerate sample for the 2-form machinery; the round trip
        // above already counted
      }
    }
    ++done;
  }
}

void suite_n5(uint64_t seed, int samples) {
  Gen gen(seed);
  int done = 0;
  while (done < samples) {
    std::vector<Rat> t = gen.custom_poles(2);
    std::vector<Rat> u = {gen.rat(), gen.rat()};
    Rat rho = gen.nonzero();
    std::vector<Rat> q = {gen.rat(), gen.rat()};
    Json cx = {{"t", rat_list_json(t)}, {"u", rat_list_json(u)},
               {"rho", rat_to_string(rho)}, {"q", rat_list_json(q)}};
    bool bad = q[0] == q[1];
    for (const Rat& z : {t[0], t[1], Rat(0), Rat(1)})
      bad = bad || q[0] == z || q[1] == z;
    if (bad) continue;
    std::vector<Rat> b = bun5_closed(t[0], t[1], u[0], u[1]);
    if (!proj_equal(b, bun_coords(t, u)))
      throw SuiteFailure("n5 bundle closed form disagrees with the kernel", cx);
    std::vector<Rat> c, c_cl, p_cl;
    try {
      std::vector<Rat> back = bun5_inverse_closed(t[0], t[1], b);
      if (back != u) throw SuiteFailure("n5 inverse closed form fails", cx);
      c = c_from_qu(t, rho, u, q);
      c_cl = c5_closed(t[0], t[1], rho, b, q[0], q[1]);
      p_cl = p5_closed(rho, b, q[0], q[1]);
    } catch (const std::domain_error&) {
      continue;
    }
    if (c != c_cl) throw SuiteFailure("n5 Higgs closed form disagrees", cx);
    if (p_cl[0] != darboux_p(t, rho, u, c, q[0]) || p_cl[1] != darboux_p(t, rho, u, c, q[1]))
      throw SuiteFailure("n5 dual-variable closed form disagrees", cx);
    if (!proj_equal(b5_from_pq(rho, p_cl[0], p_cl[1], q[0], q[1]), b))
      throw SuiteFailure("n5 inverse parameterization disagrees", cx);
    ++done;
  }
}

void suite_duality(uint64_t seed, int samples) {
  Gen gen(seed);
  int done = 0;
  while (done < samples) {
    int n = 4 + (int)(gen.rng() % 4);
    int m = n - 3;
    std::vector<Rat> t = gen.custom_poles(m);
    Rat rho = gen.nonzero();
    std::vector<Rat> a, b;
    for (int k = 0; k <= m; ++k) {
      a.push_back(gen.rat());
      b.push_back(gen.rat());
    }
    if (done % 3 == 0 && a.back() != 0) {
      // Push a third of the samples onto the incidence variety.
      Rat s = 0;
      for (int k = 0; k < m; ++k) s += a[k] * b[k];
      b.back() = -s / a.back();
    }
    Json cx = {{"t", rat_list_json(t)}, {"rho", rat_to_string(rho)},
               {"a", rat_list_json(a)}, {"b", rat_list_json(b)}};
    SolvedConnection<Rat> sol;
    try {
      sol = solve_connection(t, rho, a, b);
    } catch (const std::domain_error&) {
      continue;
    }
    Rat pairing = incidence_pairing(a, b);
    if ((sol.lambda == 0) != (pairing == 0))
      throw SuiteFailure("lambda zero locus differs from the incidence variety", cx);
    Poly<Rat> P = apparent_polynomial(t, rho, sol.u, sol.lambda, sol.c);
    std::vector<Rat> a2;
    for (int k = 0; k <= m; ++k) a2.push_back(P.coeff(k));
    if (!proj_equal(a2, a)) throw SuiteFailure("duality round trip fails", cx);
    // A genuine connection never lands on the incidence variety.
    std::vector<Rat> u = bun_inverse(t, b);
    std::vector<Rat> c;
    for (int k = 0; k < m; ++k) c.push_back(gen.rat());
    Poly<Rat> Pc = apparent_polynomial(t, rho, u, Rat(1), c);
    std::vector<Rat> ac;
    for (int k = 0; k <= m; ++k) ac.push_back(Pc.coeff(k));
    if (incidence_pairing(ac, bun_coords(t, u)) == 0)
      throw SuiteFailure("connection image touched the incidence variety", cx);
    ++done;
  }
}

void suite_walls(uint64_t, int) {
  auto walls = wall_list(4, 0);
  if (walls.size() != 12)
    throw SuiteFailure("wall count is not 12", Json{{"count", walls.size()}});
  ChamberReport rep = chamber_census_n4();
  if (rep.chamber_count != 16)
    throw SuiteFailure("chamber count is not 16", Json{{"count", rep.chamber_count}});
  for (const ChamberSample& ch : rep.chambers)
    for (const Wall& w : walls)
      if (w.eval(ch.rep) == 0)
        throw SuiteFailure("chamber representative sits on a wall", wall_json(w));
  if (!n4_moduli_nonempty(Weights(std::vector<Rat>(4, Rat(1, 2)))))
    throw SuiteFailure("democratic n=4 weights rejected", Json::object());
}

void suite_delpezzo(uint64_t seed, int) {
  PointConfig cfg({Rat(2), Rat(3)});
  CurveCatalog cat = sixteen_curves(cfg);
  auto adj = delpezzo_incidence(cat);
  for (size_t k = 0; k < adj.size(); ++k)
    if (adj[k].size() != 5)
      throw SuiteFailure("incidence graph is not 5-regular",
                         Json{{"curve", cat.curves[k].name()}});
  GroupReport rep = elm_pair_group(cfg, seed);
  if (rep.order != 16 || !rep.transitive)
    throw SuiteFailure("transport group is not transitive of order 16",
                       Json{{"order", rep.order}, {"transitive", rep.transitive}});
  ChartAtlas atlas = chart_membership_table(cfg, seed);
  auto expect = [&](const std::string& entry, const std::set<std::string>& charts) {
    for (const std::string& c : atlas.chart_names)
      if (atlas.membership(entry, c) != (charts.count(c) > 0))
        throw SuiteFailure("atlas membership mismatch",
                           Json{{"entry", entry}, {"chart", c}});
  };
  expect("D", {"V_1", "V_2", "V_3", "V_4", "V_5"});
  expect("Pi", {"V", "V^"});
  for (int i = 1; i <= 5; ++i) {
    expect("D_" + std::to_string(i), {"V"});
    expect("Pi_" + std::to_string(i), {"V^", "V_1", "V_2", "V_3", "V_4", "V_5"});
    for (int j = i + 1; j <= 5; ++j) {
      expect("D_{" + std::to_string(i) + "," + std::to_string(j) + "}",
             {"V_" + std::to_string(i), "V_" + std::to_string(j)});
      std::set<std::string> lc = {"V", "V^"};
      for (int k = 1; k <= 5; ++k)
        if (k != i && k != j) lc.insert("V_" + std::to_string(k));
      expect("Pi_{" + std::to_string(i) + "," + std::to_string(j) + "}", lc);
    }
  }
}

void suite_degeneration(uint64_t seed, int samples) {
  Gen gen(seed);
  int done = 0;
  while (done < std::max(1, samples / 10)) {
    std::vector<Rat> t = gen.custom_poles(2);
    Rat rho = gen.rat(), kappa = gen.nonzero();
    Rat c1 = gen.rat(), c2 = gen.rat(), u2 = gen.rat();
    Json cx = {{"t", rat_list_json(t)},       {"rho", rat_to_string(rho)},
               {"kappa", rat_to_string(kappa)}, {"c1", rat_to_string(c1)},
               {"c2", rat_to_string(c2)},     {"u2", rat_to_string(u2)}};
    DegenerationResult res;
    try {
      res = degeneration_limit(t[0], t[1], rho, kappa, c1, c2, u2);
    } catch (const std::domain_error&) {
      continue;
    }
    if (!res.ok()) throw SuiteFailure("degeneration limit check fails", cx);
    ++done;
  }
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

Json delpezzo_report(const PointConfig& cfg, const std::string& report, uint64_t seed,
                     bool table) {
  Json out;
  CurveCatalog cat = sixteen_curves(cfg);
  if (report == "curves") {
    Json curves = Json::array();
    for (const SpecialCurve& c : cat.curves) {
      Json j = {{"name", c.name()}};
      if (c.tag == CurveTag::Conic) j["equation"] = "b1^2 - b0*b2";
      if (c.tag == CurveTag::Line) j["equation"] = rat_list_json(c.equation);
      if (c.tag == CurveTag::Exceptional) j["center"] = point_json(cat.D[c.i - 1]);
      curves.push_back(j);
    }
    out["curves"] = curves;
    if (table) {
      for (const Json& c : curves)
        std::cout << c["name"].get<std::string>() << "\t"
                  << (c.contains("equation") ? c["equation"].dump()
                                             : c["center"].dump())
                  << "\n";
    }
  } else if (report == "incidence") {
    auto adj = delpezzo_incidence(cat);
    Json rows = Json::array();
    for (size_t k = 0; k < adj.size(); ++k)
      rows.push_back({{"curve", cat.curves[k].name()}, {"meets", adj[k]}});
    out["incidence"] = rows;
    out["regular_degree"] = 5;
    if (table)
      for (size_t k = 0; k < adj.size(); ++k) {
        std::cout << cat.curves[k].name() << "\t->";
        for (int m : adj[k]) std::cout << " " << cat.curves[m].name();
        std::cout << "\n";
      }
  } else if (report == "atlas") {
    ChartAtlas atlas = chart_membership_table(cfg, seed);
    out["charts"] = atlas.chart_names;
    Json rows = Json::array();
    for (size_t e = 0; e < atlas.entry_names.size(); ++e) {
      Json row = {{"entry", atlas.entry_names[e]}};
      Json charts = Json::array();
      for (size_t c = 0; c < atlas.chart_names.size(); ++c)
        if (atlas.member[e][c]) charts.push_back(atlas.chart_names[c]);
      row["member_of"] = charts;
      rows.push_back(row);
    }
    out["membership"] = rows;
    if (table)
      for (const Json& row : rows)
        std::cout << row["entry"].get<std::string>() << "\t" << row["member_of"].dump()
                  << "\n";
  } else if (report == "group") {
    GroupReport rep = elm_pair_group(cfg, seed);
    out["order"] = rep.order;
    out["transitive"] = rep.transitive;
    Json gens = Json::array();
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        PairAction act = elm_pair_action(i, j, cfg, seed + 17 * i + j);
        gens.push_back({{"i", i}, {"j", j}, {"perm", act.perm}});
      }
    out["generators"] = gens;
    if (table) {
      std::cout << "order " << rep.order << (rep.transitive ? " transitive" : "") << "\n";
      for (const Json& g : gens)
        std::cout << "elm(" << g["i"] << "," << g["j"] << ")\t" << g["perm"].dump() << "\n";
    }
  } else {
    throw std::invalid_argument("--report wants curves, incidence, atlas or group");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Exact chart computations for rank-2 logarithmic connections"};
  cli.require_subcommand(1);

  std::string t_flag, nu_flag, u_flag, c_flag, w_flag, a_flag, b_flag, q_flag, mu_flag;
  std::string lambda_flag = "1";
  std::string input_arg, sign_flag, report_flag = "curves", suite_flag;
  int n_flag = 0, d_flag = 0, at_flag = 0, samples = 100;
  uint64_t seed = 7;
  bool table = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed);
    sub->add_option("--samples", samples);
    sub->add_flag("--table", table);
    sub->add_flag("--json", [](int64_t) {});  // JSON is the default output
  };

  CLI::App* vapp = cli.add_subcommand("app", "apparent-divisor coefficients of a chart");
  vapp->add_option("--n", n_flag);
  vapp->add_option("--t", t_flag)->required();
  vapp->add_option("--nu", nu_flag);
  vapp->add_option("--u", u_flag)->required();
  vapp->add_option("--c", c_flag)->required();
  vapp->add_option("--lambda", lambda_flag);
  add_common(vapp);

  CLI::App* vbun = cli.add_subcommand("bun", "bundle coordinates of a chart");
  vbun->add_option("--n", n_flag);
  vbun->add_option("--t", t_flag)->required();
  vbun->add_option("--u", u_flag)->required();
  add_common(vbun);

  CLI::App* vinv = cli.add_subcommand("invert", "joint inverse of the two maps");
  vinv->add_option("--n", n_flag);
  vinv->add_option("--t", t_flag)->required();
  vinv->add_option("--nu", nu_flag);
  vinv->add_option("--a", a_flag)->required();
  vinv->add_option("--b", b_flag)->required();
  add_common(vinv);

  CLI::App* vdar = cli.add_subcommand("darboux", "dual variables of apparent roots");
  vdar->add_option("--n", n_flag);
  vdar->add_option("--t", t_flag)->required();
  vdar->add_option("--nu", nu_flag);
  vdar->add_option("--u", u_flag)->required();
  vdar->add_option("--c", c_flag)->required();
  vdar->add_option("--q", q_flag)->required();
  add_common(vdar);

  CLI::App* velm = cli.add_subcommand("elm", "elementary transformation at a pole");
  velm->add_option("--sign", sign_flag)->required()->check(CLI::IsMember({"+", "-"}));
  velm->add_option("--at", at_flag)->required();
  velm->add_option("--t", t_flag);
  velm->add_option("input", input_arg, "JSON text or file: spectral, bundle, weights or chart")
      ->required();
  add_common(velm);

  CLI::App* vtwi = cli.add_subcommand("twist", "twist by a rank-1 connection or line bundle");
  vtwi->add_option("--mu", mu_flag);
  vtwi->add_option("--d", d_flag);
  vtwi->add_option("input", input_arg, "JSON text or file: spectral (with --mu) or bundle (with --d)")
      ->required();
  add_common(vtwi);

  CLI::App* vsta = cli.add_subcommand("stability", "stability of a parabolic bundle");
  vsta->add_option("--t", t_flag)->required();
  vsta->add_option("--w", w_flag)->required();
  vsta->add_option("input", input_arg, "bundle JSON text or file")->required();
  add_common(vsta);

  CLI::App* vwal = cli.add_subcommand("walls", "weight-space walls");
  vwal->add_option("--n", n_flag)->required();
  vwal->add_option("--d", d_flag);
  add_common(vwal);

  CLI::App* vcha = cli.add_subcommand("chambers-n4", "chamber census for four poles");
  add_common(vcha);

  CLI::App* vdel = cli.add_subcommand("delpezzo", "degree-4 Del Pezzo curve reports");
  vdel->add_option("--t", t_flag)->required();
  vdel->add_option("--report", report_flag)
      ->check(CLI::IsMember({"curves", "incidence", "atlas", "group"}));
  add_common(vdel);

  CLI::App* vsym = cli.add_subcommand("symplectic-check", "random exact 2-form checks");
  vsym->add_option("--n", n_flag);
  add_common(vsym);

  CLI::App* vver = cli.add_subcommand("verify", "bundled verification suites");
  vver->add_option("--suite", suite_flag)
      ->required()
      ->check(CLI::IsMember({"n4", "n5", "duality", "walls", "delpezzo", "degeneration"}));
  add_common(vver);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = cli.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*vapp) {
      std::vector<Rat> t = parse_rat_csv(t_flag);
      int n = (int)t.size() + 3;
      if (n_flag && n_flag != n) throw std::invalid_argument("--n disagrees with --t");
      SpectralData sd = nu_flag.empty() ? default_spectral(n) : spectral_from_flag(nu_flag, n);
      auto chart = ConnectionChart<Rat>::from_spectral(
          PointConfig(t), sd, parse_rat_csv(u_flag), rat_from_string(lambda_flag),
          parse_rat_csv(c_flag));
      emit(Json{{"a", rat_list_json(app_coords(chart))},
                {"app", rat_list_json(app(chart).coords())}});
    } else if (*vbun) {
      std::vector<Rat> t = parse_rat_csv(t_flag);
      if (n_flag && n_flag != (int)t.size() + 3)
        throw std::invalid_argument("--n disagrees with --t");
      std::vector<Rat> u = parse_rat_csv(u_flag);
      if (u.size() != t.size()) throw std::invalid_argument("--u must match --t in length");
      emit(Json{{"b", rat_list_json(ProjPoint(bun_coords(t, u)).coords())}});
    } else if (*vinv) {
      std::vector<Rat> t = parse_rat_csv(t_flag);
      int n = (int)t.size() + 3;
      if (n_flag && n_flag != n) throw std::invalid_argument("--n disagrees with --t");
      SpectralData sd = nu_flag.empty() ? default_spectral(n) : spectral_from_flag(nu_flag, n);
      auto sol = solve_connection(t, sd.rho(), parse_rat_csv(a_flag), parse_rat_csv(b_flag));
      emit(Json{{"lambda", rat_json(sol.lambda)},
                {"c", rat_list_json(sol.c)},
                {"u", rat_list_json(sol.u)}});
    } else if (*vdar) {
      std::vector<Rat> t = parse_rat_csv(t_flag);
      int n = (int)t.size() + 3;
      if (n_flag && n_flag != n) throw std::invalid_argument("--n disagrees with --t");
      SpectralData sd = nu_flag.empty() ? default_spectral(n) : spectral_from_flag(nu_flag, n);
      std::vector<Rat> u = parse_rat_csv(u_flag), c = parse_rat_csv(c_flag);
      Json p = Json::array();
      for (const Rat& q : parse_rat_csv(q_flag))
        p.push_back(rat_json(darboux_p(t, sd.rho(), u, c, q)));
      emit(Json{{"p", p}});
    } else if (*velm) {
      Json j = load_json_arg(input_arg);
      int i = at_flag - 1;
      if (i < 0) throw std::invalid_argument("--at is a 1-based pole index");
      bool minus = sign_flag == "-";
      if (j.contains("w")) {
        Weights w = weights_from_json(j);
        emit(weights_json(elm_weights(i, w)));
      } else if (j.contains("dirs")) {
        if (t_flag.empty())
          throw std::invalid_argument("bundle input needs --t for the pole configuration");
        PointConfig cfg(parse_rat_csv(t_flag));
        ParabolicBundle b = bundle_from_json(j);
        emit(bundle_json(minus ? elm_minus_bundle(i, b, cfg) : elm_plus_bundle(i, b, cfg)));
      } else if (j.contains("u")) {
        // Chart input: the spectral data transforms in degree -1 labels.
        ConnectionChart<Rat> chart = chart_from_json(j);
        SpectralData sd(chart.nu_plus, chart.nu_minus, -1);
        emit(spectral_json(minus ? elm_minus(i, sd) : elm_plus(i, sd)));
      } else {
        SpectralData sd = spectral_from_json(j);
        emit(spectral_json(minus ? elm_minus(i, sd) : elm_plus(i, sd)));
      }
    } else if (*vtwi) {
      Json j = load_json_arg(input_arg);
      if (j.contains("dirs")) {
        emit(bundle_json(twist_bundle(bundle_from_json(j), d_flag)));
      } else {
        if (mu_flag.empty())
          throw std::invalid_argument("spectral twist needs --mu exponents");
        emit(spectral_json(twist(spectral_from_json(j), RankOneTwist(parse_rat_csv(mu_flag)))));
      }
    } else if (*vsta) {
      PointConfig cfg(parse_rat_csv(t_flag));
      ParabolicBundle b = bundle_from_json(load_json_arg(input_arg));
      Weights w(parse_rat_csv(w_flag));
      Json out = {{"stable", is_stable(b, cfg, w)},
                  {"semistable", is_semistable(b, cfg, w)},
                  {"undecomposable", is_undecomposable(b, cfg)}};
      auto sw = exists_stabilizing_weight(b, cfg);
      out["stabilizing_weight"] = sw ? rat_list_json(sw->w) : Json();
      emit(out);
    } else if (*vwal) {
      auto walls = wall_list(n_flag, d_flag);
      Json list = Json::array();
      for (const Wall& w : walls) list.push_back(wall_json(w));
      emit(Json{{"count", walls.size()}, {"walls", list}});
    } else if (*vcha) {
      ChamberReport rep = chamber_census_n4();
      Json chambers = Json::array();
      for (const ChamberSample& ch : rep.chambers)
        chambers.push_back({{"signs", ch.signs}, {"rep", rat_list_json(ch.rep.w)}});
      emit(Json{{"count", rep.chamber_count}, {"chambers", chambers}});
    } else if (*vdel) {
      PointConfig cfg(parse_rat_csv(t_flag));
      Json out = delpezzo_report(cfg, report_flag, seed, table);
      if (!table) emit(out);
    } else if (*vsym) {
      int n = n_flag ? n_flag : 4;
      if (n < 4) throw std::invalid_argument("--n must be at least 4");
      Gen gen(seed);
      int done = 0, m = n - 3;
      while (done < samples) {
        std::vector<Rat> t = gen.custom_poles(m);
        std::vector<Rat> q, u;
        for (int k = 0; k < m; ++k) {
          q.push_back(gen.rat());
          u.push_back(gen.rat());
        }
        Rat rho = gen.nonzero();
        try {
          if (!symplectic_check(t, rho, q, u)) {
            std::cerr << "counterexample: "
                      << Json{{"t", rat_list_json(t)}, {"rho", rat_to_string(rho)},
                              {"q", rat_list_json(q)}, {"u", rat_list_json(u)}}
                             .dump()
                      << "\n";
            return kExitSuite;
          }
        } catch (const std::domain_error&) {
          continue;
        }
        ++done;
      }
      emit(Json{{"n", n}, {"samples", samples}, {"seed", seed}, {"ok", true}});
    } else if (*vver) {
      try {
        if (suite_flag == "n4") suite_n4(seed, samples);
        else if (suite_flag == "n5") suite_n5(seed, samples);
        else if (suite_flag == "duality") suite_duality(seed, samples);
        else if (suite_flag == "walls") suite_walls(seed, samples);
        else if (suite_flag == "delpezzo") suite_delpezzo(seed, samples);
        else suite_degeneration(seed, samples);
      } catch (const SuiteFailure& f) {
        std::cerr << "suite " << suite_flag << " failed: " << f.what() << "\n";
        std::cerr << "counterexample: " << f.counterexample.dump() << "\n";
        return kExitSuite;
      }
      emit(Json{{"suite", suite_flag}, {"samples", samples}, {"seed", seed}, {"ok", true}});
    }
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    std::cerr << cli.help() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
