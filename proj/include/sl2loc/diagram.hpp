#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2loc/reps/analysis.hpp"

namespace sl2loc {

/// An action diagram as data: the window slice of a module's basis with
/// H-weight annotations, plus one edge per nonzero action coefficient.
/// Byte-deterministic in every emission format (nodes sorted by index,
/// edges by (from, op, to), canonical rational rendering).
struct DiagramDoc {
  struct Node {
    long index;
    std::string label;
    std::optional<Rational> h_weight;  // absent for non-weight modules
    bool operator==(const Node& o) const {
      return index == o.index && label == o.label && h_weight == o.h_weight;
    }
  };
  struct Edge {
    char op;  // 'E' | 'F' | 'H'
    long from, to;
    Rational coeff;
    bool operator==(const Edge& o) const {
      return op == o.op && from == o.from && to == o.to && coeff == o.coeff;
    }
  };
  struct Cert {
    std::string name, verdict, detail;
    bool operator==(const Cert& o) const {
      return name == o.name && verdict == o.verdict && detail == o.detail;
    }
  };

  std::string family;
  std::string chart;  // "chart0" | "chartinf"
  long t = 1;
  Rational eta;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<std::string> identifications;
  std::vector<Cert> certificates;

  bool operator==(const DiagramDoc& o) const {
    return family == o.family && chart == o.chart && t == o.t && eta == o.eta &&
           nodes == o.nodes && edges == o.edges &&
           identifications == o.identifications && certificates == o.certificates;
  }
};

/// Diagram of a local chart model.
DiagramDoc diagram_of_local(const reps::BasisModule& m, long window);

/// Diagram of the global-sections realization.
DiagramDoc diagram_of_global(const reps::Sl2Module& M, long window);

std::string diagram_to_json(const DiagramDoc& doc);
DiagramDoc diagram_from_json(const std::string& text);

std::string diagram_to_dot(const DiagramDoc& doc);
std::string diagram_to_ascii(const DiagramDoc& doc);
std::string diagram_to_text(const DiagramDoc& doc);

}  // namespace sl2loc
