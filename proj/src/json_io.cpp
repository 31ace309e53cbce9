#include "zee2/json_io.hpp"

namespace zee2 {

Json element_to_json(const AlgebraElement& e) {
  Json terms = Json::array();
  for (const auto& [x, c] : e.terms()) {
    terms.push_back(Json{{"x", to_bit_string(x, e.arity())},
                         {"re", c.re().get_str()},
                         {"im", c.im().get_str()}});
  }
  return Json{{"n", e.arity()}, {"terms", std::move(terms)}};
}

AlgebraElement element_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  AlgebraElement e(n);
  for (const auto& term : j.at("terms")) {
    const std::string xs = term.at("x").get<std::string>();
    if (static_cast<int>(xs.size()) != n)
      throw std::invalid_argument("element term bit string has wrong length");
    const std::string re = term.at("re").get<std::string>();
    const std::string im = term.contains("im") ? term.at("im").get<std::string>() : "0";
    e.add_term(parse_bit_string(xs), GaussianRational::from_strings(re, im));
  }
  return e;
}

Json twist_to_json(const TwistSpec& spec) {
  Json j{{"family", family_name(spec.family())}, {"n", spec.arity()}};
  if (spec.family() != Family::Custom) j["p"] = spec.signature();
  return j;
}

Gl2Map map_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::uint32_t> rows;
  for (const auto& row : j.at("rows")) {
    const std::string s = row.get<std::string>();
    if (static_cast<int>(s.size()) != n)
      throw std::invalid_argument("map row bit string has wrong length");
    rows.push_back(parse_bit_string(s));
  }
  return Gl2Map(n, std::move(rows));
}

Json hr_instance_to_json(const HrInstance& inst, const HrVerification& v) {
  Json h = Json::array();
  for (std::uint32_t y : inst.H) h.push_back(to_bit_string(y, inst.n));
  Json forms = Json::object();
  const std::uint32_t size = std::uint32_t{1} << inst.n;
  for (std::uint32_t x = 0; x < size; ++x) {
    Json entries = Json::array();
    for (std::uint32_t y : inst.H) {
      const int sign = twist_octonion(x ^ y, y) ? -1 : 1;
      entries.push_back(Json{{"y", to_bit_string(y, inst.n)}, {"sign", sign}});
    }
    forms[to_bit_string(x, inst.n)] = std::move(entries);
  }
  return Json{{"n", inst.n},
              {"rho", rho(std::uint64_t{1} << inst.n)},
              {"H", std::move(h)},
              {"forms", std::move(forms)},
              {"verified", v.symbolic ? "symbolic" : "randomized"},
              {"seed", v.seed}};
}

std::string hr_instance_to_text(const HrInstance& inst) {
  const std::uint32_t size = std::uint32_t{1} << inst.n;
  std::string out = "(";
  for (std::uint32_t x = 0; x < size; ++x) {
    if (x) out += " + ";
    out += "a_" + to_bit_string(x, inst.n) + "^2";
  }
  out += ") * (";
  for (std::size_t i = 0; i < inst.H.size(); ++i) {
    if (i) out += " + ";
    out += "b_" + to_bit_string(inst.H[i], inst.n) + "^2";
  }
  out += ") =";
  for (std::uint32_t x = 0; x < size; ++x) {
    out += (x ? " + c_" : " c_") + to_bit_string(x, inst.n) + "^2";
  }
  out += "\n";
  for (std::uint32_t x = 0; x < size; ++x) {
    out += "c_" + to_bit_string(x, inst.n) + " =";
    for (std::uint32_t y : inst.H) {
      const int sign = twist_octonion(x ^ y, y) ? -1 : 1;
      out += sign < 0 ? " - " : " + ";
      out += "a_" + to_bit_string(x ^ y, inst.n) + "*b_" + to_bit_string(y, inst.n);
    }
    out += "\n";
  }
  return out;
}

}  // namespace zee2
