#include "quadlab/json_io.hpp"

#include <stdexcept>

namespace quadlab {

json to_json(const Scalar& s) {
  if (s.is_exact()) return s.to_string();
  return s.to_double();
}

json to_json(const CircleQuad& q) {
  return json{{"D", q.diameter()}, {"theta0", q.theta0()}, {"arcs", q.arcs()}};
}

CircleQuad circle_quad_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("quad JSON must be an object");
  for (const char* key : {"D", "theta0", "arcs"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("quad JSON lacks \"") + key + "\"");

  double d = 0.0;
  const json& dj = j.at("D");
  if (dj.is_number()) d = dj.get<double>();
  else if (dj.is_string()) d = Scalar::parse(dj.get<std::string>(), Mode::Exact).to_double();
  else throw std::invalid_argument("\"D\" must be a number or a \"p/q\" string");

  if (!j.at("theta0").is_number()) throw std::invalid_argument("\"theta0\" must be a number");
  const json& aj = j.at("arcs");
  if (!aj.is_array() || aj.size() != 4) throw std::invalid_argument("\"arcs\" must be an array of 4 numbers");
  Arcs arcs{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!aj[i].is_number()) throw std::invalid_argument("\"arcs\" must be an array of 4 numbers");
    arcs[i] = aj[i].get<double>();
  }
  return make_quad(d, j.at("theta0").get<double>(), arcs);
}

json to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& st : trace.steps) {
    json s{{"kind", st.kind == StepKind::Morph ? "morph" : "recut"}};
    if (st.kind == StepKind::Morph) s["t"] = st.morph_t;
    else s["diagonal"] = std::string(to_string(st.diagonal));
    s["quad"] = to_json(st.quad_after);
    s["phi"] = st.phi_after;
    s["diag_angle"] = st.diag_angle_after;
    s["marked_triangle"] = st.is_marked_triangle;
    steps.push_back(std::move(s));
  }
  return json{{"start", to_json(trace.start)},
              {"steps", std::move(steps)},
              {"phi_ratios", trace.phi_ratios},
              {"terminated", trace.terminated}};
}

json to_json(const FiberReport& r) {
  auto table = [](const std::map<Monomial, Scalar>& coeffs) {
    json t = json::object();
    for (const auto& [m, c] : coeffs) t[std::to_string(m.first) + "," + std::to_string(m.second)] = to_json(c);
    return t;
  };
  return json{{"rho", to_json(r.rho)},
              {"sigma", to_json(r.sigma)},
              {"exact", r.exact},
              {"grid_radius", r.grid_radius},
              {"samples", r.samples},
              {"kappa", to_json(r.kappa)},
              {"mu", to_json(r.mu)},
              {"offdiag_max_A", to_json(r.max_offdiag_a)},
              {"offdiag_max_B2", to_json(r.max_offdiag_b2)},
              {"kappa_sq_minus_mu", to_json(r.kappa_sq_minus_mu)},
              {"offgrid_agrees", r.offgrid_agrees},
              {"coeffs_A", table(r.coeffs_a)},
              {"coeffs_B2", table(r.coeffs_b2)}};
}

}  // namespace quadlab
