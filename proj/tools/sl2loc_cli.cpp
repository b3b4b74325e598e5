// sl2loc — exact computations with twisted differential operators on the
// projective line and the module families realized by their global sections.
//
// Subcommands:
//   derive    — the chart operators beta(E), beta(F), beta(H) and the Casimir
//   module    — action diagram of a family over a window (text/json/dot/ascii)
//   classify  — structural report and the classical name of the module
//   check-all — the full invariant and golden-table suite
//
// Exit codes: 0 success, 1 check failure, 2 usage or configuration error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sl2loc/checks.hpp"
#include "sl2loc/classify.hpp"
#include "sl2loc/diagram.hpp"
#include "sl2loc/derive_doc.hpp"

namespace {

using namespace sl2loc;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open output file '" + path + "'");
    os << text;
  }
};

Chart parse_chart(const std::string& s) {
  if (s == "chart0" || s == "z" || s == "0") return Chart::Zero;
  if (s == "chartinf" || s == "w" || s == "inf") return Chart::Infinity;
  throw Error("unknown chart '" + s + "' (use chart0|chartinf)");
}

int cmd_derive(long t, const std::string& format, const Output& out) {
  DeriveDoc doc = derive_doc(t);
  if (format == "json")
    out.write(derive_doc_to_json(doc));
  else
    out.write(derive_doc_to_text(doc));
  return 0;
}

int cmd_module(const std::string& family_name, const std::string& chart_name,
               long t, const std::string& eta_text, long window,
               const std::string& format, const Output& out) {
  reps::Family family = reps::family_from_name(family_name);
  Rational eta = Rational::from_string(eta_text);
  DiagramDoc doc;
  if (!chart_name.empty()) {
    reps::BasisModule local = reps::make_local(family, parse_chart(chart_name),
                                               Rational(t), eta);
    doc = diagram_of_local(local, window);
  } else {
    doc = diagram_of_global(reps::global_module(family, Rational(t), eta), window);
  }
  if (format == "json")
    out.write(diagram_to_json(doc));
  else if (format == "dot")
    out.write(diagram_to_dot(doc));
  else
    out.write(diagram_to_ascii(doc));
  return 0;
}

int cmd_classify(const std::string& family_name, long t, const std::string& eta_text,
                 long window, const std::string& format, const Output& out) {
  reps::Family family = reps::family_from_name(family_name);
  Rational eta = Rational::from_string(eta_text);
  ClassifyReport rep = classify(family, Rational(t), eta, window);
  if (format == "json")
    out.write(rep.to_json());
  else
    out.write(rep.text());
  return 0;
}

int cmd_check_all(long window, long t_max, const std::string& inject_fault,
                  const std::string& format, const Output& out) {
  checks::CheckOptions opts;
  opts.window = window;
  opts.ts.clear();
  for (long t = 1; t <= t_max; ++t) opts.ts.push_back(t);
  opts.inject_fault = inject_fault;
  auto results = checks::run_all(opts);
  if (format == "json")
    out.write(checks::summary_json(results));
  else
    out.write(checks::summary_text(results));
  return checks::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact twisted differential operators on P^1 and their modules"};
  app.require_subcommand(1);

  std::string family, chart, eta = "0", format = "text", out_path, inject_fault;
  long t = 1, window = 60, t_max = 6;

  auto add_common = [&](CLI::App* cmd, bool with_family) {
    if (with_family)
      cmd->add_option("--family", family,
                      "FiniteO|VermaPoint|DualVermaOpen|DeltaInfinity|PrincipalEven|"
                      "PrincipalOdd|WhittakerOpen")
          ->required();
    cmd->add_option("--t", t, "twist parameter (integer >= 1)")->required();
    cmd->add_option("--eta", eta, "Whittaker parameter, a rational like 3/2");
    cmd->add_option("--window", window, "truncation window (>= 8)")
        ->check(CLI::Range(8L, 100000L));
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* derive = app.add_subcommand("derive", "chart operators and Casimir");
  derive->add_option("--t", t, "twist parameter")->required();
  derive->add_option("--format", format, "text|json");
  derive->add_option("--out", out_path, "output file");

  CLI::App* module_cmd = app.add_subcommand("module", "action diagram of a family");
  add_common(module_cmd, true);
  module_cmd->add_option("--chart", chart, "chart0|chartinf (default: the global realization)");
  module_cmd->add_option("--format", format, "text|json|dot|ascii");

  CLI::App* classify_cmd = app.add_subcommand("classify", "structural report");
  add_common(classify_cmd, true);
  classify_cmd->add_option("--format", format, "text|json");

  CLI::App* check = app.add_subcommand("check-all", "run the full check suite");
  check->add_option("--window", window, "truncation window (>= 8)")
      ->check(CLI::Range(8L, 100000L));
  check->add_option("--t-max", t_max, "check t = 1..t_max")->check(CLI::Range(1L, 12L));
  check->add_option("--format", format, "text|json");
  check->add_option("--out", out_path, "output file");
  check->add_option("--inject-fault", inject_fault,
                    "corrupt one golden comparison (negative control)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto require_format = [&](std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
      if (format == f) return;
    std::string list;
    for (const char* f : allowed) list += (list.empty() ? "" : "|") + std::string(f);
    throw Error("format '" + format + "' is not one of " + list);
  };

  try {
    Output out{out_path};
    if (derive->parsed()) {
      require_format({"text", "json"});
      return cmd_derive(t, format, out);
    }
    if (module_cmd->parsed()) {
      require_format({"text", "json", "dot", "ascii"});
      return cmd_module(family, chart, t, eta, window, format, out);
    }
    if (classify_cmd->parsed()) {
      require_format({"text", "json"});
      return cmd_classify(family, t, eta, window, format, out);
    }
    if (check->parsed()) {
      require_format({"text", "json"});
      return cmd_check_all(window, t_max, inject_fault, format, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
