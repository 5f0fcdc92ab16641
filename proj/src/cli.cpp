#include "tiltwall/cli.hpp"

#include "tiltwall/euler.hpp"
#include "tiltwall/heartgate.hpp"
#include "tiltwall/scene.hpp"
#include "tiltwall/tiltcalc.hpp"
#include "tiltwall/walls.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace tiltwall {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Globals {
  bool json = false;
  std::string out_path;
  int precision = 3;
};

// Raw option text; parsed after CLI11 so that every malformed fraction is
// reported through the same path.
struct Args {
  std::string cls, cls2;
  std::string beta, alpha, a;
  std::string beta_min, beta_max, alpha_min = "0", alpha_max;
  std::string disc_bound = "0", omega2_min = "1/100";
  unsigned threads = 1;
  std::string collection;
  std::string a0;
  bool with_walls = false;
};

Rational q(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const InputError&) {
    throw InputError(std::string("--") + what + ": '" + s + "' is not an exact fraction");
  }
}

std::string interval_text(const std::optional<AInterval>& iv) {
  if (!iv) return "empty";
  return "(" + (iv->lower ? to_string(*iv->lower) : std::string("-inf")) + ", " +
         to_string(iv->upper) + ")";
}

Json interval_json(const std::optional<AInterval>& iv) {
  if (!iv) return nullptr;
  Json j;
  j["lower"] = iv->lower ? Json(to_string(*iv->lower)) : Json(nullptr);
  j["lower_attained"] = iv->lower_attained;
  j["upper"] = to_string(iv->upper);
  return j;
}

Json charge_json(const ChargeValue& z) {
  return {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

std::string charge_text(const ChargeValue& z) {
  return to_string(z.re) + " + i*(" + to_string(z.im) + ")";
}

CollectionSpec load_collection(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InputError("cannot read collection file '" + arg.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return CollectionSpec::from_json(buf.str());
  }
  return CollectionSpec::named(arg);
}

Json names_json(const CollectionSpec& spec) {
  Json j = Json::array();
  for (const auto& n : spec.names) j.push_back(n);
  return j;
}

Region region_from(const Args& a) {
  Region r{q(a.beta_min, "beta-min"), q(a.beta_max, "beta-max"), q(a.alpha_min, "alpha-min"),
           q(a.alpha_max, "alpha-max")};
  r.validate();
  return r;
}

struct Output {
  std::ostringstream text;
  Json json;
  int code = kOk;
};

Output cmd_class(const Args& a) {
  Output o;
  const NumClass v = parse_class(a.cls);
  o.text << to_literal(v) << '\n';
  o.json["schema"] = "tiltwall.class/1";
  o.json["input"] = a.cls;
  o.json["class"] = to_literal(v);
  o.json["mu"] = slope_mu(v).str();
  o.json["discriminant"] = to_string(discriminant(v));
  o.json["chi"] = to_string(chi_p3(v));
  o.json["integral"] = is_integral_class(v);
  return o;
}

Output cmd_tilt(const Args& a) {
  Output o;
  const NumClass v = parse_class(a.cls);
  const ParamPoint p = ParamPoint::in_u(q(a.beta, "beta"), q(a.alpha, "alpha"));
  const auto t = twisted_v(v, p.beta());
  Json tw = Json::array();
  for (const auto& c : t) tw.push_back(to_string(c));
  o.json["schema"] = "tiltwall.tilt/1";
  o.json["class"] = to_literal(v);
  o.json["beta"] = to_string(p.beta());
  o.json["alpha"] = to_string(p.alpha());
  o.json["omega2"] = to_string(p.omega2());
  o.json["twisted"] = tw;
  o.json["mu"] = slope_mu(v).str();
  o.json["nu"] = tilt_slope_nu(v, p).str();
  o.json["discriminant"] = to_string(discriminant(v));
  o.json["Z2"] = charge_json(central_charge_2(v, p));
  o.json["Q"] = to_string(quadratic_form_Q(v, p));
  o.json["bg_margin"] = to_string(bg_margin(v, p));

  o.text << "class        " << to_literal(v) << '\n'
         << "twisted      " << to_string(t[0]) << ',' << to_string(t[1]) << ','
         << to_string(t[2]) << ',' << to_string(t[3]) << '\n'
         << "mu           " << slope_mu(v).str() << '\n'
         << "nu           " << tilt_slope_nu(v, p).str() << '\n'
         << "discriminant " << to_string(discriminant(v)) << '\n'
         << "Z2           " << charge_text(central_charge_2(v, p)) << '\n';
  if (!a.a.empty()) {
    const ChargeValue z3 = central_charge_3(v, p, q(a.a, "a"));
    o.json["a"] = a.a;
    o.json["Z3"] = charge_json(z3);
    o.text << "Z3           " << charge_text(z3) << '\n';
  }
  o.text << "Q            " << to_string(quadratic_form_Q(v, p)) << '\n'
         << "bg_margin    " << to_string(bg_margin(v, p)) << '\n';
  return o;
}

Output cmd_bg(const Args& a) {
  Output o;
  const NumClass v = parse_class(a.cls);
  const ParamPoint p = ParamPoint::in_u(q(a.beta, "beta"), q(a.alpha, "alpha"));
  const BgCheck bg = bg_check(v, p);
  o.code = bg.holds ? kOk : kFailed;
  o.json["schema"] = "tiltwall.bg-check/1";
  o.json["class"] = to_literal(v);
  o.json["beta"] = to_string(p.beta());
  o.json["alpha"] = to_string(p.alpha());
  o.json["margin"] = to_string(bg.margin);
  o.json["holds"] = bg.holds;
  o.json["slope_is_beta"] = bg.slope_is_beta;
  o.text << "margin " << to_string(bg.margin) << '\n'
         << (bg.holds ? "holds" : "violated")
         << (bg.slope_is_beta ? "" : " (note: nu(v) != beta, the inequality is not claimed here)")
         << '\n';
  return o;
}

Output cmd_walls(const Args& a) {
  Output o;
  const NumClass v = parse_class(a.cls);
  const Region region = region_from(a);
  WallSearchOptions opt;
  opt.disc_bound = q(a.disc_bound, "disc-bound");
  opt.omega2_min = q(a.omega2_min, "omega2-min");
  opt.threads = a.threads;
  const WallSearchResult res = enumerate_candidate_walls(v, region, opt);

  o.json["schema"] = "tiltwall.walls/1";
  o.json["class"] = to_literal(v);
  o.json["region"] = {{"beta_min", to_string(region.beta_min)},
                      {"beta_max", to_string(region.beta_max)},
                      {"alpha_min", to_string(region.alpha_min)},
                      {"alpha_max", to_string(region.alpha_max)}};
  o.json["disc_bound"] = to_string(opt.disc_bound);
  o.json["omega2_min"] = to_string(opt.omega2_min);
  o.json["box"] = {{"v0", {res.box.v0_min.str(), res.box.v0_max.str()}},
                   {"v1", {res.box.v1_min.str(), res.box.v1_max.str()}},
                   {"v2", {to_string(res.box.v2_min), to_string(res.box.v2_max)}},
                   {"v2_step", "1/2"},
                   {"candidates", res.box.candidates}};
  Json walls = Json::array();
  for (const auto& w : res.walls) {
    Json wj{{"A", to_string(w.wall.A)},
            {"B", to_string(w.wall.B)},
            {"C", to_string(w.wall.C)},
            {"equation", w.wall.str()},
            {"witness", to_literal(w.witness)}};
    walls.push_back(wj);
    o.text << w.wall.str() << "    witness " << to_literal(w.witness) << '\n';
  }
  o.json["walls"] = walls;
  o.text << res.walls.size() << " wall(s), " << res.box.candidates << " candidate(s) scanned\n";
  return o;
}

Output cmd_reduce(const Args& a) {
  Output o;
  const ParamPoint p = ParamPoint::in_u(q(a.beta, "beta"), q(a.alpha, "alpha"));
  const Reduction r = reduce_to_fundamental(p);
  Json log = Json::array();
  std::string log_text;
  for (const auto& s : r.log) {
    log.push_back(s.str());
    log_text += (log_text.empty() ? "" : " ") + s.str();
  }
  o.json["schema"] = "tiltwall.reduce/1";
  o.json["beta"] = to_string(r.point.beta());
  o.json["alpha"] = to_string(r.point.alpha());
  o.json["log"] = log;
  o.json["small_omega"] = r.small_omega;
  o.text << "(" << to_string(r.point.beta()) << ", " << to_string(r.point.alpha()) << ")\n"
         << "log " << (log_text.empty() ? "(none)" : log_text) << '\n'
         << "omega < 1/2: " << (r.small_omega ? "yes" : "no") << '\n';
  return o;
}

// Without --a0 the check runs at the least admissible a0 when it is attained,
// otherwise at a point inside the interval.
Rational witness_a0(const std::optional<AInterval>& iv) {
  if (!iv) return 0;
  if (iv->lower && iv->lower_attained) return *iv->lower;
  if (iv->lower) return (*iv->lower + iv->upper) / 2;
  return iv->upper - 1;
}

Output cmd_collection_check(const Args& a) {
  Output o;
  const CollectionSpec spec = load_collection(a.collection);
  const Rational beta = q(a.beta, "beta");
  const std::optional<AInterval> iv = admissible_a_interval(spec, beta);
  const Rational a0 = a.a0.empty() ? witness_a0(iv) : q(a.a0, "a0");
  const CheckReport rep = general_condition_check(spec, beta, a0);
  o.code = rep.overall ? kOk : kFailed;

  o.json["schema"] = "tiltwall.collection-check/1";
  o.json["collection"] = names_json(spec);
  o.json["beta"] = to_string(beta);
  o.json["alpha"] = to_string(alpha_E_beta(spec.distinguished(), beta));
  o.json["a0"] = to_string(a0);
  o.json["a0_source"] = a.a0.empty() ? "interval" : "user";
  Json conds = Json::array();
  for (const auto& c : rep.conditions) {
    conds.push_back({{"id", c.id},
                     {"statement", c.statement},
                     {"strict", c.strict},
                     {"pass", c.pass},
                     {"residual", c.residual ? Json(c.residual->str()) : Json(nullptr)}});
    o.text << (c.pass ? "pass " : "FAIL ") << c.id << "  " << c.statement;
    if (c.residual) o.text << "  [residual " << c.residual->str() << "]";
    o.text << '\n';
  }
  o.json["conditions"] = conds;
  o.json["overall"] = rep.overall;
  o.json["interval"] = interval_json(rep.interval);
  o.json["notes"] = rep.notes;
  o.text << "a0 " << to_string(a0) << '\n'
         << "interval " << interval_text(rep.interval) << '\n'
         << "overall " << (rep.overall ? "pass" : "fail") << '\n';
  for (const auto& n : rep.notes) o.text << "note: " << n << '\n';
  return o;
}

Output cmd_interval(const Args& a) {
  Output o;
  const CollectionSpec spec = load_collection(a.collection);
  const Rational beta = q(a.beta, "beta");
  const std::optional<AInterval> iv = admissible_a_interval(spec, beta);
  o.code = iv ? kOk : kFailed;
  o.json["schema"] = "tiltwall.interval/1";
  o.json["collection"] = names_json(spec);
  o.json["beta"] = to_string(beta);
  o.json["interval"] = interval_json(iv);
  o.text << interval_text(iv) << '\n';
  return o;
}

Output cmd_twist(const Args& a) {
  Output o;
  const NumClass s = parse_class(a.cls);
  const NumClass v = parse_class(a.cls2);
  const NumClass r = spherical_twist_class(s, v);
  o.json["schema"] = "tiltwall.twist/1";
  o.json["s"] = to_literal(s);
  o.json["v"] = to_literal(v);
  o.json["chi_local"] = to_string(chi_local(s, v));
  o.json["result"] = to_literal(r);
  o.text << to_literal(r) << '\n';
  return o;
}

Output cmd_plot(const Args& a, const Globals& g) {
  Output o;
  const NumClass v = parse_class(a.cls);
  const Region region = region_from(a);
  std::vector<Wall> walls;
  if (a.with_walls) {
    WallSearchOptions opt;
    opt.disc_bound = q(a.disc_bound, "disc-bound");
    opt.omega2_min = q(a.omega2_min, "omega2-min");
    opt.threads = a.threads;
    for (const auto& w : enumerate_candidate_walls(v, region, opt).walls) walls.push_back(w.wall);
  }
  const SceneDescription scene = plot_scene(v, region, walls);
  o.json = scene_to_json(scene);
  o.text << scene_to_svg(scene, g.precision);
  return o;
}

void write_to(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << data;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tilt-stability and wall computations on (local) P^3", "tiltwall"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  Args a;
  app.add_flag("--json", g.json, "JSON report on stdout");
  app.add_option("-o,--out", g.out_path, "write the result to a file (SVG for plot)");
  app.add_option("--precision", g.precision, "decimals in SVG coordinates")
      ->check(CLI::Range(0, 12));

  auto* c_class = app.add_subcommand("class", "resolve a name or literal to a class");
  c_class->add_option("class", a.cls, "name such as T(-2), or literal v0,v1,v2,v3")->required();

  auto* c_tilt = app.add_subcommand("tilt", "slopes and central charges at (beta, alpha)");
  c_tilt->add_option("class", a.cls)->required();
  c_tilt->add_option("--beta", a.beta)->required();
  c_tilt->add_option("--alpha", a.alpha)->required();
  c_tilt->add_option("--a", a.a, "degree-three constant for Z3");

  auto* c_bg = app.add_subcommand("bg-check", "BG-type margin at (beta, alpha)");
  c_bg->add_option("class", a.cls)->required();
  c_bg->add_option("--beta", a.beta)->required();
  c_bg->add_option("--alpha", a.alpha)->required();

  auto add_region = [&a](CLI::App* sub) {
    sub->add_option("class", a.cls)->required();
    sub->add_option("--beta-min", a.beta_min)->required();
    sub->add_option("--beta-max", a.beta_max)->required();
    sub->add_option("--alpha-min", a.alpha_min, "default 0");
    sub->add_option("--alpha-max", a.alpha_max)->required();
    sub->add_option("--disc-bound", a.disc_bound, "default 0");
    sub->add_option("--omega2-min", a.omega2_min, "least 2 alpha - beta^2 searched, default 1/100");
    sub->add_option("--threads", a.threads, "0 = hardware concurrency");
  };
  auto* c_walls = app.add_subcommand("walls", "numerical walls in a region");
  add_region(c_walls);

  auto* c_reduce = app.add_subcommand("reduce", "map (beta, alpha) to -1/2 <= beta <= 0");
  c_reduce->add_option("beta", a.beta)->required();
  c_reduce->add_option("alpha", a.alpha)->required();

  auto* c_cc = app.add_subcommand("collection-check", "boundary condition system for a collection");
  c_cc->add_option("collection", a.collection, "beilinson4, omega, lines or @file.json")->required();
  c_cc->add_option("--beta", a.beta)->required();
  c_cc->add_option("--a0", a.a0);

  auto* c_iv = app.add_subcommand("interval", "admissible a-interval of a collection");
  c_iv->add_option("collection", a.collection)->required();
  c_iv->add_option("--beta", a.beta)->required();

  auto* c_twist = app.add_subcommand("twist", "numerical spherical twist of v by s");
  c_twist->add_option("s", a.cls)->required();
  c_twist->add_option("v", a.cls2)->required();

  auto* c_plot = app.add_subcommand("plot", "SVG of the parameter plane for a class");
  add_region(c_plot);
  c_plot->add_flag("--walls", a.with_walls, "include numerical walls");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "tiltwall: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    Output o;
    if (c_class->parsed()) o = cmd_class(a);
    else if (c_tilt->parsed()) o = cmd_tilt(a);
    else if (c_bg->parsed()) o = cmd_bg(a);
    else if (c_walls->parsed()) o = cmd_walls(a);
    else if (c_reduce->parsed()) o = cmd_reduce(a);
    else if (c_cc->parsed()) o = cmd_collection_check(a);
    else if (c_iv->parsed()) o = cmd_interval(a);
    else if (c_twist->parsed()) o = cmd_twist(a);
    else o = cmd_plot(a, g);

    const std::string body = g.json ? o.json.dump(2) + "\n" : o.text.str();
    if (c_plot->parsed() && !g.out_path.empty()) {
      write_to(g.out_path, o.text.str());
      if (g.json) out << body;
    } else if (!g.out_path.empty()) {
      write_to(g.out_path, body);
    } else {
      out << body;
    }
    return o.code;
  } catch (const InputError& e) {
    err << "tiltwall: " << e.what() << '\n';
    return kInvalid;
  } catch (const DomainError& e) {
    err << "tiltwall: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace tiltwall
