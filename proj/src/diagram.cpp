#include "sl2loc/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sl2loc/classify.hpp"

namespace sl2loc {

namespace {

using reps::ActionRule;
using reps::IndexDomain;

void sort_edges(std::vector<DiagramDoc::Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.op != b.op) return a.op < b.op;
    return a.to < b.to;
  });
}

DiagramDoc build(const std::string& family, Chart chart, const Rational& t,
                 const Rational& eta, const IndexDomain& domain,
                 const std::string& label, const ActionRule& e, const ActionRule& f,
                 const ActionRule& h, long window) {
  DiagramDoc doc;
  doc.family = family;
  doc.chart = chart_name(chart);
  doc.t = t.to_long();
  doc.eta = eta;

  const ActionRule en = e.at(t, eta), fn = f.at(t, eta), hn = h.at(t, eta);
  const bool weight = hn.is_diagonal();

  const std::vector<long> slice = domain.window_slice(window);
  const std::set<long> in_slice(slice.begin(), slice.end());
  for (long k : slice) {
    DiagramDoc::Node node;
    node.index = k;
    node.label = label + "_" + std::to_string(k);
    if (weight) {
      auto c = hn.coeff_at(0);
      node.h_weight = c ? c->eval(Rational(k), Rational(0), Rational(0)) : Rational(0);
    }
    doc.nodes.push_back(std::move(node));

    auto emit = [&](char op, const ActionRule& rule) {
      for (const auto& term : rule.terms) {
        Rational c = term.coeff.eval(Rational(k), Rational(0), Rational(0));
        if (c.is_zero()) continue;
        long target = k + term.shift;
        if (!domain.contains(target)) continue;  // vanishes by the module relation
        if (!in_slice.count(target)) continue;   // leaves the diagram's window
        doc.edges.push_back(DiagramDoc::Edge{op, k, target, c});
      }
    };
    emit('E', en);
    emit('F', fn);
    emit('H', hn);
  }
  sort_edges(doc.edges);
  return doc;
}

}  // namespace

DiagramDoc diagram_of_local(const reps::BasisModule& m, long window) {
  return build(reps::family_name(m.family), m.chart, m.t, m.eta, m.domain,
               m.basis_label, reps::action_table(m.family, m.chart, Letter::E),
               reps::action_table(m.family, m.chart, Letter::F),
               reps::action_table(m.family, m.chart, Letter::H), window);
}

DiagramDoc diagram_of_global(const reps::Sl2Module& M, long window) {
  DiagramDoc doc = build(reps::family_name(M.family), M.realization, M.t, M.eta,
                         M.domain, M.basis_label, M.actE, M.actF, M.actH, window);
  doc.identifications = module_names(M.family, M.t, M.eta);
  return doc;
}

// --- JSON ------------------------------------------------------------------

std::string diagram_to_json(const DiagramDoc& doc) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["family"] = doc.family;
  j["chart"] = doc.chart;
  j["t"] = doc.t;
  j["eta"] = doc.eta.to_string();
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : doc.nodes) {
    nlohmann::json jn;
    jn["index"] = n.index;
    jn["label"] = n.label;
    if (n.h_weight)
      jn["weight"] = n.h_weight->to_string();
    else
      jn["weight"] = nullptr;
    j["nodes"].push_back(jn);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : doc.edges) {
    nlohmann::json je;
    je["op"] = std::string(1, e.op);
    je["from"] = e.from;
    je["to"] = e.to;
    je["coeff"] = e.coeff.to_string();
    j["edges"].push_back(je);
  }
  j["identifications"] = doc.identifications;
  j["certificates"] = nlohmann::json::array();
  for (const auto& c : doc.certificates) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["verdict"] = c.verdict;
    jc["detail"] = c.detail;
    j["certificates"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

DiagramDoc diagram_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != 1)
    throw Error("diagram_from_json: unsupported schema version");
  DiagramDoc doc;
  doc.family = j.at("family").get<std::string>();
  doc.chart = j.at("chart").get<std::string>();
  doc.t = j.at("t").get<long>();
  doc.eta = Rational::from_string(j.at("eta").get<std::string>());
  for (const auto& jn : j.at("nodes")) {
    DiagramDoc::Node n;
    n.index = jn.at("index").get<long>();
    n.label = jn.at("label").get<std::string>();
    if (!jn.at("weight").is_null())
      n.h_weight = Rational::from_string(jn.at("weight").get<std::string>());
    doc.nodes.push_back(std::move(n));
  }
  for (const auto& je : j.at("edges")) {
    DiagramDoc::Edge e{je.at("op").get<std::string>()[0], je.at("from").get<long>(),
                       je.at("to").get<long>(),
                       Rational::from_string(je.at("coeff").get<std::string>())};
    doc.edges.push_back(std::move(e));
  }
  for (const auto& s : j.at("identifications"))
    doc.identifications.push_back(s.get<std::string>());
  for (const auto& jc : j.at("certificates"))
    doc.certificates.push_back(DiagramDoc::Cert{jc.at("name").get<std::string>(),
                                                jc.at("verdict").get<std::string>(),
                                                jc.at("detail").get<std::string>()});
  return doc;
}

// --- DOT ---------------------------------------------------------------------

std::string diagram_to_dot(const DiagramDoc& doc) {
  std::ostringstream os;
  os << "digraph " << doc.family << " {\n";
  os << "  rankdir=RL;\n";
  for (const auto& n : doc.nodes) {
    os << "  \"b" << n.index << "\" [label=\"" << n.label << "\"";
    if (n.h_weight) os << ", weight=\"" << n.h_weight->to_string() << "\"";
    os << "];\n";
  }
  for (const auto& e : doc.edges) {
    os << "  \"b" << e.from << "\" -> \"b" << e.to << "\" [op=\"" << e.op
       << "\", coeff=\"" << e.coeff.to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// --- ASCII -------------------------------------------------------------------

std::string diagram_to_ascii(const DiagramDoc& doc) {
  std::ostringstream os;
  os << doc.family << " (t=" << doc.t;
  if (!doc.eta.is_zero()) os << ", eta=" << doc.eta.to_string();
  os << ", " << doc.chart << ")\n";
  std::map<long, std::map<char, std::string>> rows;
  std::map<long, const DiagramDoc::Node*> node_of;
  for (const auto& n : doc.nodes) node_of[n.index] = &n;
  for (const auto& e : doc.edges) {
    std::string& cell = rows[e.from][e.op];
    if (!cell.empty()) cell += ", ";
    cell += e.coeff.to_string() + " -> " + node_of.at(e.to)->label;
  }
  for (const auto& n : doc.nodes) {
    os << "  " << n.label;
    if (n.h_weight) os << " (H=" << n.h_weight->to_string() << ")";
    for (char op : {'E', 'F', 'H'}) {
      auto it = rows.find(n.index);
      if (it == rows.end()) continue;
      auto jt = it->second.find(op);
      if (jt == it->second.end()) continue;
      os << "  " << op << ": " << jt->second;
    }
    os << "\n";
  }
  for (const auto& id : doc.identifications) os << "  = " << id << "\n";
  for (const auto& c : doc.certificates)
    os << "  [" << c.name << "] " << c.verdict << (c.detail.empty() ? "" : ": " + c.detail)
       << "\n";
  return os.str();
}

std::string diagram_to_text(const DiagramDoc& doc) { return diagram_to_ascii(doc); }

}  // namespace sl2loc
