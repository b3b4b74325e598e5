#include "sl2loc/derive_doc.hpp"

#include <json.hpp>

namespace sl2loc {

DeriveDoc derive_doc(long t) {
  DeriveDoc doc;
  doc.t = t;
  const Rational tr(t);
  for (Letter l : {Letter::E, Letter::F, Letter::H}) {
    GlobalOp<Rational> g = beta<Rational>(LieWord::letter(l), tr);
    doc.ops.emplace_back(std::string(1, letter_name(l)) + "_0", render(g.op0));
    doc.ops.emplace_back(std::string(1, letter_name(l)) + "_inf", render(g.opinf));
  }
  doc.casimir = casimir_scalar_identity<Rational>(tr).to_string();
  return doc;
}

std::string derive_doc_to_text(const DeriveDoc& doc) {
  std::string out = "t = " + std::to_string(doc.t) + "\n";
  for (const auto& [name, text] : doc.ops) out += name + " = " + text + "\n";
  out += "casimir = " + doc.casimir + "\n";
  return out;
}

std::string derive_doc_to_json(const DeriveDoc& doc) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["t"] = doc.t;
  j["operators"] = nlohmann::json::array();
  for (const auto& [name, text] : doc.ops)
    j["operators"].push_back({{"name", name}, {"op", text}});
  j["casimir"] = doc.casimir;
  return j.dump(2) + "\n";
}

DeriveDoc derive_doc_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != 1)
    throw Error("derive_doc_from_json: unsupported schema version");
  DeriveDoc doc;
  doc.t = j.at("t").get<long>();
  for (const auto& jo : j.at("operators"))
    doc.ops.emplace_back(jo.at("name").get<std::string>(), jo.at("op").get<std::string>());
  doc.casimir = j.at("casimir").get<std::string>();
  return doc;
}

bool derive_doc_roundtrip_ok(const DeriveDoc& doc) {
  DeriveDoc fresh = derive_doc(doc.t);
  if (!(fresh == doc)) return false;
  // parse every rendered operator and compare against the derivation
  const Rational tr(doc.t);
  for (const auto& [name, text] : doc.ops) {
    Chart chart = name.find("_0") != std::string::npos ? Chart::Zero : Chart::Infinity;
    Letter l = name[0] == 'E' ? Letter::E : name[0] == 'F' ? Letter::F : Letter::H;
    WeylOp<Rational> parsed = parse_weyl_rational(text, chart);
    WeylOp<Rational> derived = derive_chart_operator<Rational>(letter_matrix(l), chart, tr);
    if (!(parsed == derived)) return false;
  }
  return true;
}

}  // namespace sl2loc
