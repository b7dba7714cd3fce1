#include "ospkw/serialize.hpp"

namespace ospkw {

namespace {

Json roots_json(const std::vector<Root>& roots) {
  Json a = Json::array();
  for (const Root& r : roots) a.push_back(root_string(r));
  return a;
}

Json roots_json(const std::vector<Weight>& roots) {
  Json a = Json::array();
  for (const Weight& r : roots) a.push_back(root_string(r));
  return a;
}

}  // namespace

Json to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exp = Json::array();
    for (std::size_t i = 0; i < p.rank(); ++i) exp.push_back(e[i]);
    terms.push_back(Json{{"exp", std::move(exp)}, {"coef", c.str()}});
  }
  return Json{{"n", p.n()}, {"m", p.m()}, {"terms", std::move(terms)}};
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>(), m = j.at("m").get<std::size_t>();
    std::vector<LaurentPolynomial::Term> terms;
    for (const Json& t : j.at("terms")) {
      const auto& exp = t.at("exp");
      if (exp.size() != n + m) fail(ErrorCode::ParseError, "exponent of wrong length");
      Exponent e(n + m);
      for (std::size_t i = 0; i < n + m; ++i) e[i] = exp[i].get<std::int64_t>();
      terms.emplace_back(e, BigInt(t.at("coef").get<std::string>()));
    }
    return LaurentPolynomial::from_terms(n, m, std::move(terms));
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    fail(ErrorCode::ParseError, std::string("bad coefficient: ") + e.what());
  }
}

Json to_json(const TamenessReport& r) {
  Json j;
  j["algebra"] = r.algebra.name();
  j["lambda"] = r.lambda.str();
  j["minus"] = r.minus;
  j["k"] = r.atypicality_k;
  j["tame"] = r.tame;
  j["borel"] = r.witness_borel ? Json(r.witness_borel->sequence.str()) : Json(nullptr);
  j["hw"] = r.tame ? Json(display(r.highest_weight)) : Json(nullptr);
  j["T"] = roots_json(r.distinguished_T);
  j["levi"] = roots_json(r.levi_simple_roots);
  j["e"] = r.e_lambda ? Json(*r.e_lambda) : Json(nullptr);
  j["j"] = r.tame ? Json(r.j_lambda) : Json(nullptr);
  return j;
}

Json to_json(const BottomTrace& t, const Algebra& alg) {
  Json steps = Json::array();
  for (const BottomStep& s : t.steps)
    steps.push_back(Json{{"before", display(s.before)},
                         {"b_j", to_string(s.b_j)},
                         {"b_tilde", to_string(s.b_tilde)},
                         {"after", display(s.after)},
                         {"partition", s.partition.str()}});
  return Json{{"algebra", alg.name()}, {"start", t.start.str()}, {"steps", std::move(steps)}, {"result", t.result.str()}};
}

Json to_json(const CharacterResult& cr) {
  Json j;
  j["algebra"] = cr.algebra.name();
  j["lambda"] = cr.lambda.str();
  j["minus"] = cr.minus;
  j["k"] = cr.atypicality_k;
  j["hw"] = display(cr.highest_weight);
  j["natural_hw"] = display(cr.natural_highest_weight);
  j["borel"] = cr.borel_used.sequence.str();
  j["T"] = roots_json(cr.T_used);
  j["j"] = cr.j_used;
  j["dim"] = cr.dimension.str();
  j["character"] = to_json(cr.character);
  return j;
}

Json to_json(const std::vector<std::pair<std::int64_t, HookPartition>>& family, const Algebra& alg) {
  Json members = Json::array();
  for (const auto& [x, p] : family) members.push_back(Json{{"x", x}, {"partition", p.str()}});
  return Json{{"algebra", alg.name()}, {"family", std::move(members)}};
}

Json to_json(const AdmissibilityResult& a) {
  return Json{{"positive", a.positive},
              {"nonnegative", a.nonnegative},
              {"violation", a.violation ? Json(root_string(*a.violation)) : Json(nullptr)},
              {"violation_value", a.violation ? Json(to_string(a.violation_value)) : Json(nullptr)},
              {"checked", a.checked}};
}

Json error_json(ErrorCode code, const std::string& message) {
  return Json{{"error", Json{{"code", std::string(error_code_name(code))}, {"message", message}}}};
}

}  // namespace ospkw
