#include "combalg/json_io.hpp"

#include <stdexcept>

namespace combalg {

namespace {

Rational rat_from_term(const Json& t) {
  return rational_from_strings(t.at("num").get<std::string>(), t.at("den").get<std::string>());
}

void put_rat(Json& t, const Rational& q) {
  t["num"] = rat_num(q).str();
  t["den"] = rat_den(q).str();
}

}  // namespace

Json to_json(const CommSeries& s) {
  Json j;
  j["dim"] = s.dim();
  j["trunc"] = s.trunc();
  Json terms = Json::array();
  for (const auto& [a, c] : s.terms()) {
    Json t;
    t["exp"] = a;
    put_rat(t, c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

CommSeries comm_series_from_json(const Json& j) {
  CommSeries s(j.at("dim").get<int>(), j.at("trunc").get<int>());
  for (const Json& t : j.at("terms")) {
    MultiIndex a = t.at("exp").get<MultiIndex>();
    s.set_coeff(a, s.coeff(a) + rat_from_term(t));
  }
  return s;
}

Json to_json(const NCSeries& s) {
  Json j;
  j["dim"] = s.dim();
  j["trunc"] = s.trunc();
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms()) {
    Json t;
    t["word"] = w;
    put_rat(t, c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

NCSeries nc_series_from_json(const Json& j) {
  NCSeries s(j.at("dim").get<int>(), j.at("trunc").get<int>());
  for (const Json& t : j.at("terms")) {
    Word w = t.at("word").get<Word>();
    s.set_coeff(w, s.coeff(w) + rat_from_term(t));
  }
  return s;
}

Json to_json(const WeylElement& s) {
  Json j;
  j["dim"] = s.dim();
  j["trunc"] = s.trunc();
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) {
    Json t;
    t["x"] = k.x;
    t["y"] = k.y;
    t["h"] = k.h;
    put_rat(t, c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

WeylElement weyl_from_json(const Json& j) {
  WeylElement s(j.at("dim").get<int>(), j.at("trunc").get<int>());
  for (const Json& t : j.at("terms")) {
    WeylKey k{t.at("x").get<MultiIndex>(), t.at("y").get<MultiIndex>(), t.at("h").get<int>()};
    s.set_coeff(k, s.coeff(k) + rat_from_term(t));
  }
  return s;
}

Json to_json(const SuperSeries& s) {
  Json j;
  j["dim"] = s.dim();
  j["odd"] = s.odd_dim();
  j["trunc"] = s.trunc();
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) {
    Json t;
    t["exp"] = k.x;
    t["theta"] = k.theta;
    put_rat(t, c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

SuperSeries super_from_json(const Json& j) {
  SuperSeries s(j.at("dim").get<int>(), j.at("odd").get<int>(), j.at("trunc").get<int>());
  for (const Json& t : j.at("terms")) {
    SuperKey k{t.at("exp").get<MultiIndex>(), t.at("theta").get<ColorSubset>()};
    s.set_coeff(k, s.coeff(k) + rat_from_term(t));
  }
  return s;
}

Json to_json(const CouplingSeries& s) {
  Json j;
  j["dim"] = s.dim();
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) {
    Json t;
    Json g = Json::array();
    for (auto [sub, pow] : k.g) g.push_back(Json::array({sub, pow}));
    t["g"] = g;
    t["x"] = k.x;
    put_rat(t, c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

CouplingSeries coupling_from_json(const Json& j) {
  CouplingSeries s(j.at("dim").get<int>());
  for (const Json& t : j.at("terms")) {
    CouplingSeries::Key k;
    for (const Json& gp : t.at("g")) k.g.emplace_back(gp.at(0).get<int>(), gp.at(1).get<int>());
    k.x = t.at("x").get<MultiIndex>();
    s.add_term(k, rat_from_term(t));
  }
  return s;
}

Json flag_graph_to_json(const FlagGraph& g, const Integer& aut) {
  Json j;
  j["flags"] = g.flags;
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = edges;
  j["aut"] = aut.convert_to<long long>();
  return j;
}

Json to_json(const AdmissibleGraph& g) {
  Json j;
  j["k"] = g.aerial;
  j["n"] = g.ground;
  j["key"] = g.key();
  Json targets = Json::array();
  for (const auto& pair : g.targets) targets.push_back(Json::array({pair[0], pair[1]}));
  j["targets"] = targets;
  return j;
}

PosetInput poset_from_json(const Json& j) {
  std::vector<Json> elements;
  for (const Json& e : j.at("elements")) elements.push_back(e);
  auto find = [&](const Json& v) -> int {
    for (size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == v) return static_cast<int>(i);
    throw std::invalid_argument("poset: relation names unknown element " + v.dump());
  };
  std::vector<std::pair<int, int>> pairs;
  for (const Json& r : j.at("relations")) {
    if (!r.is_array() || r.size() != 2)
      throw std::invalid_argument("poset: relations must be pairs");
    pairs.emplace_back(find(r.at(0)), find(r.at(1)));
  }
  return PosetInput{elements, FinitePoset::from_pairs(static_cast<int>(elements.size()), pairs)};
}

WeightAssignment weights_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("weights: expected a JSON object");
  WeightAssignment w;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_string())
      w.set(it.key(), parse_rational(v.get<std::string>()));
    else if (v.is_number_integer())
      w.set(it.key(), Rational(Integer(v.get<long long>())));
    else
      throw std::invalid_argument("weights: values must be rationals as strings or integers");
  }
  return w;
}

}  // namespace combalg
