// Command-line front end. Exit codes: 0 success / no counterexample,
// 1 usage or parse error, 2 counterexample found.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "factorlab/error.hpp"
#include "factorlab/factor.hpp"
#include "factorlab/families.hpp"
#include "factorlab/forbidden.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/harness.hpp"
#include "factorlab/toughness.hpp"

using namespace factorlab;

namespace {

struct GraphInput {
  std::string positional;
  std::string graph6;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", positional, "graph6 string or edge-list text");
    cmd->add_option("--graph6", graph6, "graph6 string");
    cmd->add_option("--file", file, "file holding one graph (graph6 or edge list)");
  }

  std::string read_text(std::istream& fallback) const {
    if (!graph6.empty()) return graph6;
    if (!positional.empty()) return positional;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw ContractViolation("cannot open " + file);
      return {std::istreambuf_iterator<char>(in), {}};
    }
    return {std::istreambuf_iterator<char>(fallback), {}};
  }

  Graph read() const { return parse_graph_text(read_text(std::cin)); }
};

std::string edge_list(const std::vector<Edge>& edges) {
  std::string out;
  for (auto [u, v] : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + '-' + std::to_string(v);
  }
  return out;
}

struct ClauseOptions {
  std::string pattern;
  std::string clause = "1";
  std::string tough;
  bool strict = false;
  bool ge = false;
  bool json = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pattern", pattern, "forbidden linear forest, e.g. P2+3P1")->required();
    cmd->add_option("--clause", clause, "1, 1a, 1b, 2, 2a, 2b, 3 or 4");
    cmd->add_option("--tough", tough, "override the toughness threshold (e.g. 7/6)");
    auto* s = cmd->add_flag("--strict", strict, "require tau > t");
    auto* g = cmd->add_flag("--ge", ge, "require tau >= t");
    s->excludes(g);
    cmd->add_flag("--json", json, "structured output");
  }

  Clause make(const LinearForestPattern& r) const {
    std::optional<Rational> t;
    if (!tough.empty()) t = Rational::parse(tough);
    std::optional<bool> cmp;
    if (strict) cmp = true;
    if (ge) cmp = false;
    return make_clause(clause, r, t, cmp);
  }
};

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["graph"] = v.graph_id;
  j["status"] = to_string(v.status);
  j["hypothesis"] = {{"toughness", v.toughness.to_string()},
                     {"satisfies_t", v.tough_enough},
                     {"r_free", v.r_free}};
  j["conclusion"] = {{"has_2_factor", v.has_two_factor},
                     {"exception", v.exception ? to_string(*v.exception) : std::string()}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-factors, toughness and forbidden linear forests"};
  app.require_subcommand(1);

  GraphInput tf_in;
  auto* twofactor = app.add_subcommand("twofactor", "decide 2-factor existence");
  tf_in.attach(twofactor);

  GraphInput tough_in;
  bool tough_sets = false;
  auto* tough = app.add_subcommand("toughness", "exact toughness");
  tough_in.attach(tough);
  tough->add_flag("--sets", tough_sets, "also list every toughset");

  GraphInput rf_in;
  std::string rf_pattern;
  auto* rfree = app.add_subcommand("rfree", "search for an induced linear forest");
  rf_in.attach(rfree);
  rfree->add_option("pattern,--pattern", rf_pattern, "e.g. P4+2P1")->required();

  GraphInput bar_in;
  bool bar_biased = false;
  bool bar_witness = false;
  auto* barrier = app.add_subcommand("barrier", "find a Tutte barrier");
  bar_in.attach(barrier);
  barrier->add_flag("--biased", bar_biased, "max |S|, then min |T|");
  barrier->add_flag("--witness", bar_witness, "structural checks and induced forest witness");

  std::string fam_name;
  int fam_p = 0, fam_m = 0, fam_n = 0;
  auto* family = app.add_subcommand("family", "build a named graph");
  family->add_option("name", fam_name, "H0..H12, Kmn, Pn, Cn, Kn")->required();
  family->add_option("--p", fam_p, "clique order for H5 and H12");
  family->add_option("--m", fam_m, "first side of Kmn");
  family->add_option("--n", fam_n, "second side of Kmn, or order of Pn, Cn, Kn");

  GraphInput ver_in;
  ClauseOptions ver_opts;
  auto* verify = app.add_subcommand("verify", "check one graph against a theorem clause");
  ver_in.attach(verify);
  ver_opts.attach(verify);

  std::string scan_file;
  ClauseOptions scan_opts;
  auto* scan_cmd = app.add_subcommand("scan", "check a graph6 stream against a theorem clause");
  scan_cmd->add_option("--file", scan_file, "graph6 file (default stdin)");
  scan_opts.attach(scan_cmd);

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enum", "connected graphs on n <= 7 vertices");
  enumerate->add_option("n", enum_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*twofactor) {
      Graph g = tf_in.read();
      if (auto f = find_two_factor(g)) {
        std::cout << "YES\n" << edge_list(f->edges) << '\n';
      } else {
        std::cout << "NO\n";
        if (g.order() <= 24) {
          if (auto b = find_biased_barrier(g)) std::cout << b->describe() << '\n';
        }
      }
    } else if (*tough) {
      Graph g = tough_in.read();
      if (!g.is_complete() && is_connected(g)) {
        auto r = toughsets(g);
        std::cout << r.value.to_string() << '\n';
        if (tough_sets) {
          for (VertexSet s : r.toughsets) std::cout << s.to_string() << '\n';
        } else {
          std::cout << "toughset " << r.toughsets.front().to_string() << '\n';
        }
      } else {
        std::cout << toughness(g).to_string() << '\n';
      }
    } else if (*rfree) {
      Graph g = rf_in.read();
      auto r = parse_pattern(rf_pattern);
      if (auto e = find_induced(g, r)) {
        std::cout << "CONTAINS " << r.to_string() << '\n' << e->to_string() << '\n';
      } else {
        std::cout << "FREE " << r.to_string() << '\n';
      }
    } else if (*barrier) {
      Graph g = bar_in.read();
      auto b = bar_biased || bar_witness ? find_biased_barrier(g) : find_barrier(g);
      if (!b) {
        std::cout << "none\n";
        return 0;
      }
      std::cout << b->describe() << '\n';
      if (bar_witness) {
        auto report = verify_biased_barrier_properties(g, *b);
        for (std::size_t i = 0; i < report.clauses.size(); ++i) {
          std::cout << "property " << i + 1 << ' ' << (report.clauses[i].pass ? "ok" : "FAIL")
                    << (report.clauses[i].witness.empty() ? "" : " " + report.clauses[i].witness)
                    << '\n';
        }
        std::cout << "T bound " << (check_T_bound(*b) ? "ok" : "FAIL") << '\n';
        if (!b->heavy_odd_components().empty()) {
          auto w = extract_induced_forest_witness(g, *b);
          auto show = [](const ForestWitness& f) {
            std::string out;
            for (Vertex v : f.path) out += (out.empty() ? "" : "-") + std::to_string(v);
            for (Vertex v : f.singletons) out += " " + std::to_string(v);
            return out;
          };
          std::cout << "P" << w.p4.path.size() << " witness " << show(w.p4) << '\n';
          if (w.long_path) {
            std::cout << "P" << w.long_path->path.size() << " witness " << show(*w.long_path)
                      << '\n';
          }
        }
      }
    } else if (*family) {
      FamilyParams params;
      if (fam_p) params["p"] = fam_p;
      if (fam_m) params["m"] = fam_m;
      if (fam_n) params["n"] = fam_n;
      auto inst = build_family(fam_name, params);
      std::cout << encode_graph6(inst.graph) << '\n' << inst.role_sidecar();
    } else if (*verify) {
      Graph g = ver_in.read();
      auto r = parse_pattern(ver_opts.pattern);
      auto v = verify_case(g, r, ver_opts.make(r), encode_graph6(g));
      if (ver_opts.json) {
        std::cout << verdict_json(v).dump(2) << '\n';
      } else {
        std::cout << v.to_string() << '\n';
      }
      return v.status == Status::Counterexample ? 2 : 0;
    } else if (*scan_cmd) {
      auto r = parse_pattern(scan_opts.pattern);
      Clause clause = scan_opts.make(r);
      ScanReport report;
      if (scan_file.empty()) {
        report = scan(std::cin, r, clause);
      } else {
        std::ifstream in(scan_file);
        if (!in) throw ContractViolation("cannot open " + scan_file);
        report = scan(in, r, clause);
      }
      std::cout << (scan_opts.json ? report.to_json() + "\n" : report.to_text());
      return report.count(Status::Counterexample) > 0 ? 2 : 0;
    } else if (*enumerate) {
      for (const auto& line : enumerate_small_graphs(enum_n)) std::cout << line << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
