#include "motivic/serialize.hpp"

#include <stdexcept>

namespace motivic {

Json to_json(const MotiveClass& m) {
  Json terms = Json::array();
  for (const auto& [key, mult] : m.terms()) {
    terms.push_back(Json{{"lambda", key.lambda_index},
                         {"lefschetz", key.lefschetz_power},
                         {"mult", to_decimal(mult)}});
  }
  return Json{{"genus", m.genus()}, {"terms", std::move(terms)}};
}

MotiveClass motive_from_json(const Json& doc) {
  try {
    const Genus g = doc.at("genus").get<Genus>();
    MotiveClass::TermMap terms;
    for (const auto& term : doc.at("terms")) {
      const BasisKey key{term.at("lambda").get<std::uint32_t>(),
                         term.at("lefschetz").get<std::uint64_t>()};
      const Integer mult = parse_decimal(term.at("mult").get<std::string>());
      if (sgn(mult) <= 0) throw std::invalid_argument("multiplicities must be positive");
      if (!terms.emplace(key, mult).second) throw std::invalid_argument("duplicate basis key");
    }
    return MotiveClass::from_terms(g, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed motive JSON: ") + e.what());
  }
}

std::string to_canonical_json(const MotiveClass& m) { return to_json(m).dump(); }

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_decimal(c)}));
  return out;
}

Json to_json(const BiPolynomial& h) {
  Json out = Json::array();
  for (const auto& [e, c] : h.terms()) out.push_back(Json::array({e.first, e.second, to_decimal(c)}));
  return out;
}

Json to_json(const BlockReport& report) {
  Json blocks = Json::array();
  for (const auto& block : report.blocks) {
    blocks.push_back(Json{{"sym_power", block.sym_power},
                          {"twist", block.twist},
                          {"hodge", to_json(block.hodge)}});
  }
  return Json{{"genus", report.genus}, {"blocks", std::move(blocks)}, {"total", to_json(report.total)}};
}

}  // namespace motivic
