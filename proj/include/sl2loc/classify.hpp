#pragma once

#include "sl2loc/reps/analysis.hpp"

namespace sl2loc {

/// The classical names a family's global sections go by, leading with the
/// primary one: L(t-1), M(-t-1), I(t-1), D_-(t+1), P_+(t-1), P_-(t-1),
/// Y(eta,t).
std::vector<std::string> module_names(reps::Family family, const Rational& t,
                                      const Rational& eta);

/// Structural analysis of a family's global sections: Casimir scalar,
/// weight structure, highest/lowest-weight and Whittaker vector scans,
/// irreducibility certificate, and (when applicable) the composition and
/// K-parity reports, concluded by the classical names of the module.
struct ClassifyReport {
  reps::Family family;
  Rational t, eta;
  long window = 0;

  std::string name;  // L(t-1), M(-t-1), I(t-1), D_-(t+1), P_+(t-1), P_-(t-1), Y(eta,t)
  std::vector<std::string> identifications;
  Rational casimir;
  bool weight_module = false;
  std::optional<long> dimension;  // finite-dimensional modules only
  std::vector<std::pair<std::string, Rational>> extreme_vectors;  // kind, weight
  long whittaker_vector_count = 0;  // solutions of (E - eta) v = 0
  reps::Certificate certificate;
  std::optional<reps::CompositionReport> composition;
  std::optional<reps::ParityReport> parity;

  std::string text() const;
  std::string to_json() const;
};

ClassifyReport classify(reps::Family family, const Rational& t, const Rational& eta,
                        long window);

}  // namespace sl2loc
