#include "tiltwall/scene.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace tiltwall {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kMargin = 48;
constexpr int kSamples = 160;

// Does the arc take some value in [alpha_min, alpha_max]? a2 >= 0, so the
// maximum is at an end and the minimum at an end or the vertex.
bool arc_meets(const ParabolaArc& arc, const Region& region) {
  if (arc.beta_lo > arc.beta_hi) return false;
  const Surd at_lo = arc.alpha_at(arc.beta_lo);
  const Surd at_hi = arc.alpha_at(arc.beta_hi);
  Surd lo = std::min(at_lo, at_hi);
  const Surd hi = std::max(at_lo, at_hi);
  if (arc.a2 != 0) {
    const Surd vertex(-arc.a1 / (2 * arc.a2));
    if (arc.beta_lo <= vertex && vertex <= arc.beta_hi) lo = std::min(lo, arc.alpha_at(vertex));
  }
  return lo <= Surd(region.alpha_max) && hi >= Surd(region.alpha_min);
}

nlohmann::ordered_json point_json(const PlanePoint& q) {
  return {{"beta", to_string(q.first)}, {"alpha", to_string(q.second)}};
}

const char* kind_name(SceneCurve::Kind k) {
  switch (k) {
    case SceneCurve::Kind::Boundary:
      return "boundary";
    case SceneCurve::Kind::CurveCE:
      return "curve_ce";
    case SceneCurve::Kind::Wall:
      return "wall";
  }
  return "?";
}

class Canvas {
 public:
  Canvas(const Region& r, int precision) : r_(r), precision_(precision) {
    bspan_ = to_double(r.beta_max - r.beta_min);
    aspan_ = to_double(r.alpha_max - r.alpha_min);
    if (bspan_ <= 0) bspan_ = 1;
    if (aspan_ <= 0) aspan_ = 1;
  }

  std::string x(double beta) const {
    return fmt(kMargin + (beta - to_double(r_.beta_min)) / bspan_ * (kWidth - 2 * kMargin));
  }
  std::string y(double alpha) const {
    return fmt(kHeight - kMargin -
               (alpha - to_double(r_.alpha_min)) / aspan_ * (kHeight - 2 * kMargin));
  }
  std::string fmt(double d) const {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision_) << d;
    return os.str();
  }

 private:
  const Region& r_;
  int precision_;
  double bspan_ = 1;
  double aspan_ = 1;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

Surd ParabolaArc::alpha_at(const Surd& beta) const {
  return a2 * (beta * beta) + a1 * beta + a0;
}

SceneDescription plot_scene(const NumClass& v, const Region& region,
                            const std::vector<Wall>& walls) {
  region.validate();
  SceneDescription scene{v, region, {}, {}};

  ParabolaArc boundary{Rational(1, 2), 0, 0, Surd(region.beta_min), Surd(region.beta_max)};
  if (arc_meets(boundary, region)) {
    scene.curves.push_back({SceneCurve::Kind::Boundary, "alpha = beta^2/2", boundary,
                            std::nullopt, std::nullopt});
  }

  const CurveCE ce = curve_CE(v);
  if (ce.kind == CurveCE::Kind::Parabola) {
    ParabolaArc arc{1, ce.linear, ce.constant, Surd(region.beta_min), Surd(region.beta_max)};
    if (ce.branch_below) {
      arc.beta_hi = std::min(arc.beta_hi, ce.endpoint);
    } else {
      arc.beta_lo = std::max(arc.beta_lo, ce.endpoint);
    }
    if (arc.beta_lo < arc.beta_hi && arc_meets(arc, region)) {
      scene.curves.push_back({SceneCurve::Kind::CurveCE, "C_E", arc, std::nullopt, std::nullopt});
    }
  } else if (ce.kind == CurveCE::Kind::VerticalLine) {
    const Rational x = ce.endpoint.rational_part();
    const Rational floor_alpha = std::max(region.alpha_min, x * x / 2);
    if (region.beta_min <= x && x <= region.beta_max && floor_alpha < region.alpha_max) {
      scene.curves.push_back({SceneCurve::Kind::CurveCE, "C_E", std::nullopt,
                              std::make_pair(PlanePoint{x, floor_alpha},
                                             PlanePoint{x, region.alpha_max}),
                              std::nullopt});
    }
  }

  for (const auto& w : walls) {
    if (auto seg = clip_to_region(w, region)) {
      scene.curves.push_back({SceneCurve::Kind::Wall, w.str(), std::nullopt, *seg, w});
    }
  }

  if (auto pi = pi_point(v); pi && region.contains(*pi)) {
    scene.points.push_back({"Pi(v)", *pi});
  }
  return scene;
}

nlohmann::ordered_json scene_to_json(const SceneDescription& scene) {
  nlohmann::ordered_json j;
  j["schema"] = "tiltwall.scene/1";
  j["class"] = to_literal(scene.v);
  j["region"] = {{"beta_min", to_string(scene.region.beta_min)},
                 {"beta_max", to_string(scene.region.beta_max)},
                 {"alpha_min", to_string(scene.region.alpha_min)},
                 {"alpha_max", to_string(scene.region.alpha_max)}};
  auto curves = nlohmann::ordered_json::array();
  for (const auto& c : scene.curves) {
    nlohmann::ordered_json cj;
    cj["kind"] = kind_name(c.kind);
    cj["label"] = c.label;
    if (c.arc) {
      cj["parabola"] = {{"a2", to_string(c.arc->a2)},
                        {"a1", to_string(c.arc->a1)},
                        {"a0", to_string(c.arc->a0)}};
      cj["beta_range"] = {c.arc->beta_lo.str(), c.arc->beta_hi.str()};
    }
    if (c.wall) {
      cj["line"] = {{"A", to_string(c.wall->A)},
                    {"B", to_string(c.wall->B)},
                    {"C", to_string(c.wall->C)}};
    }
    if (c.segment) cj["segment"] = {point_json(c.segment->first), point_json(c.segment->second)};
    curves.push_back(cj);
  }
  j["curves"] = curves;
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : scene.points) {
    nlohmann::ordered_json pj = point_json(p.at);
    pj["label"] = p.label;
    points.push_back(pj);
  }
  j["points"] = points;
  return j;
}

std::string scene_to_svg(const SceneDescription& scene, int precision) {
  const Canvas cv(scene.region, std::clamp(precision, 0, 12));
  const Region& r = scene.region;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "<title>class " << escape(to_literal(scene.v)) << "</title>\n"
     << "<defs><clipPath id=\"region\"><rect x=\"" << kMargin << "\" y=\"" << kMargin
     << "\" width=\"" << kWidth - 2 * kMargin << "\" height=\"" << kHeight - 2 * kMargin
     << "\"/></clipPath></defs>\n"
     << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
     << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"#444\"/>\n"
     << "<text x=\"" << kMargin << "\" y=\"" << kHeight - 16 << "\" font-size=\"12\">beta "
     << escape(to_string(r.beta_min)) << " .. " << escape(to_string(r.beta_max)) << "</text>\n"
     << "<text x=\"8\" y=\"" << kMargin - 16 << "\" font-size=\"12\">alpha "
     << escape(to_string(r.alpha_min)) << " .. " << escape(to_string(r.alpha_max)) << "</text>\n"
     << "<g clip-path=\"url(#region)\" fill=\"none\" stroke-width=\"1.5\">\n";

  for (const auto& c : scene.curves) {
    const char* color = c.kind == SceneCurve::Kind::Boundary  ? "#888"
                        : c.kind == SceneCurve::Kind::CurveCE ? "#c03"
                                                              : "#06c";
    if (c.arc) {
      const double lo = c.arc->beta_lo.approx();
      const double hi = c.arc->beta_hi.approx();
      os << "<polyline class=\"" << kind_name(c.kind) << "\" stroke=\"" << color
         << "\" points=\"";
      for (int i = 0; i <= kSamples; ++i) {
        const double b = lo + (hi - lo) * i / kSamples;
        const double a =
            to_double(c.arc->a2) * b * b + to_double(c.arc->a1) * b + to_double(c.arc->a0);
        os << (i ? " " : "") << cv.x(b) << ',' << cv.y(a);
      }
      os << "\"><title>" << escape(c.label) << "</title></polyline>\n";
    } else if (c.segment) {
      const auto& [p, q] = *c.segment;
      os << "<line class=\"" << kind_name(c.kind) << "\" stroke=\"" << color << "\" x1=\""
         << cv.x(to_double(p.first)) << "\" y1=\"" << cv.y(to_double(p.second)) << "\" x2=\""
         << cv.x(to_double(q.first)) << "\" y2=\"" << cv.y(to_double(q.second)) << "\"><title>"
         << escape(c.label) << "</title></line>\n";
    }
  }
  os << "</g>\n";
  for (const auto& p : scene.points) {
    const std::string px = cv.x(to_double(p.at.first));
    const std::string py = cv.y(to_double(p.at.second));
    os << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"3\" fill=\"#000\"/>\n"
       << "<text x=\"" << px << "\" y=\"" << py << "\" dx=\"5\" dy=\"-5\" font-size=\"12\">"
       << escape(p.label) << " (" << escape(to_string(p.at.first)) << ", "
       << escape(to_string(p.at.second)) << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tiltwall
