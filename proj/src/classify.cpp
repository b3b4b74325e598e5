#include "sl2loc/classify.hpp"

#include <sstream>

#include <json.hpp>

namespace sl2loc {

using namespace reps;

std::vector<std::string> module_names(Family family, const Rational& t,
                                      const Rational& eta) {
  const std::string tm1 = (t - Rational(1)).to_string();
  const std::string tp1 = (t + Rational(1)).to_string();
  const std::string mtm1 = (-t - Rational(1)).to_string();
  switch (family) {
    case Family::FiniteO: return {"L(" + tm1 + ")"};
    case Family::VermaPoint: return {"M(" + mtm1 + ")", "D_+(" + mtm1 + ")"};
    case Family::DualVermaOpen: return {"I(" + tm1 + ")"};
    case Family::DeltaInfinity: return {"D_-(" + tp1 + ")"};
    case Family::PrincipalEven: return {"P_+(" + tm1 + ")"};
    case Family::PrincipalOdd: return {"P_-(" + tm1 + ")"};
    default:
      if (eta.is_zero()) return {"I(" + tm1 + ")"};
      return {"Y(" + eta.to_string() + "," + t.to_string() + ")"};
  }
}

ClassifyReport classify(Family family, const Rational& t, const Rational& eta,
                        long window) {
  Sl2Module M = global_module(family, t, eta);

  ClassifyReport rep;
  rep.family = family;
  rep.t = t;
  rep.eta = M.eta;
  rep.window = window;
  rep.identifications = module_names(family, t, M.eta);
  rep.name = rep.identifications.front();
  rep.casimir = casimir_scalar(M, window);
  rep.weight_module = is_weight_basis(M);
  if (M.domain.kind == IndexDomain::Kind::FiniteRange)
    rep.dimension = M.domain.hi - M.domain.lo + 1;

  for (const auto& v : highest_weight_vectors(M, window)) {
    Element hv = M.act(Letter::H, v);
    Rational w = v.is_zero() ? Rational(0)
                             : hv.coeff(v.parts.begin()->first) / v.parts.begin()->second;
    rep.extreme_vectors.emplace_back("highest", w);
  }
  for (const auto& v : lowest_weight_vectors(M, window)) {
    Element hv = M.act(Letter::H, v);
    Rational w = v.is_zero() ? Rational(0)
                             : hv.coeff(v.parts.begin()->first) / v.parts.begin()->second;
    rep.extreme_vectors.emplace_back("lowest", w);
  }
  rep.whittaker_vector_count =
      static_cast<long>(whittaker_vectors(M, M.eta, window).size());

  rep.certificate = irreducibility_certificate(M, window);
  if (family == Family::DualVermaOpen || family == Family::PrincipalEven)
    rep.composition = composition_report(family, t, window);
  if (family == Family::PrincipalEven || family == Family::PrincipalOdd)
    rep.parity = k_weight_parity(family, t);
  return rep;
}

std::string ClassifyReport::text() const {
  std::ostringstream os;
  os << name;
  if (dimension) os << ", dim " << *dimension;
  if (certificate.irreducible())
    os << ", irreducible";
  else if (certificate.kind == reps::Certificate::Kind::Reducible)
    os << ", reducible";
  os << ", Casimir " << casimir.to_string() << "\n";
  for (size_t i = 1; i < identifications.size(); ++i)
    os << "  also known as " << identifications[i] << "\n";
  os << "  " << (weight_module ? "weight module" : "not a weight module") << "\n";
  for (const auto& [kind, w] : extreme_vectors)
    os << "  " << kind << "-weight vector of weight " << w.to_string() << "\n";
  os << "  Whittaker vectors for eta=" << eta.to_string() << ": "
     << whittaker_vector_count << "\n";
  os << "  certificate: " << certificate.describe() << "\n";
  if (composition) os << "  composition: " << composition->describe() << "\n";
  if (parity) {
    os << "  K-weight parity: " << (parity->parity == 0 ? "even" : "odd")
       << (parity->single_parity ? "" : " (NOT single)")
       << (parity->distinct ? ", opposite to the partner family" : "") << "\n";
  }
  return os.str();
}

std::string ClassifyReport::to_json() const {
  nlohmann::json j;
  j["family"] = reps::family_name(family);
  j["t"] = t.to_long();
  j["eta"] = eta.to_string();
  j["window"] = window;
  j["name"] = name;
  j["identifications"] = identifications;
  j["casimir"] = casimir.to_string();
  j["weight_module"] = weight_module;
  if (dimension)
    j["dimension"] = *dimension;
  else
    j["dimension"] = nullptr;
  j["extreme_vectors"] = nlohmann::json::array();
  for (const auto& [kind, w] : extreme_vectors)
    j["extreme_vectors"].push_back({{"kind", kind}, {"weight", w.to_string()}});
  j["whittaker_vector_count"] = whittaker_vector_count;
  j["certificate"] = {{"kind", certificate.describe()},
                      {"window_stable", certificate.window_stable}};
  if (composition)
    j["composition"] = composition->describe();
  else
    j["composition"] = nullptr;
  if (parity)
    j["k_parity"] = {{"parity", parity->parity == 0 ? "even" : "odd"},
                     {"single", parity->single_parity},
                     {"distinct", parity->distinct}};
  else
    j["k_parity"] = nullptr;
  return j.dump(2) + "\n";
}

}  // namespace sl2loc
