// symforge: generate, analyze, verify and export non-zero component graphs.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symforge/analysis.hpp"
#include "symforge/constructions.hpp"
#include "symforge/io.hpp"
#include "symforge/vecspace.hpp"
#include "symforge/verify.hpp"

namespace {

using namespace symforge;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

Graph load(const std::string& path, const std::string& format) {
  std::optional<GraphFormat> fmt;
  if (!format.empty()) fmt = parse_graph_format(format);
  return read_graph_file(path, fmt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphisms, fixing sets and fixed numbers of graphs"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Write a generated graph");
  generate->require_subcommand(1);
  std::string gen_format = "json", gen_out;
  int gen_n = 0, gen_q = 0, gen_k = 0;
  auto* gen_nzc = generate->add_subcommand("nzc", "Non-zero component graph of GF(q)^n");
  gen_nzc->add_option("--n", gen_n, "Dimension")->required();
  gen_nzc->add_option("--q", gen_q, "Field order (prime)")->required();
  auto* gen_family = generate->add_subcommand("family", "Star family with fxd - fix = 2k - 3");
  gen_family->add_option("--k", gen_k, "Family parameter (k >= 3)")->required();
  for (auto* sub : {gen_nzc, gen_family}) {
    sub->add_option("--format", gen_format, "json, edgelist or dot")->check(CLI::IsMember({"json", "edgelist", "dot"}));
    sub->add_option("--out", gen_out, "Output file (default stdout)");
  }

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Automorphism group, fixing number and fixed number of a graph");
  std::string an_file, an_format;
  bool an_fixing_graph = false, an_table = false;
  analyze->add_option("file", an_file, "Graph file")->required();
  analyze->add_option("--format", an_format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"json", "edgelist", "dot"}));
  analyze->add_flag("--fixing-graph", an_fixing_graph, "Include fixing-graph statistics");
  analyze->add_flag("--table", an_table, "Human-readable table instead of JSON");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check the library's theorems on every instance within the caps");
  int v_n_max = 4;
  std::vector<int> v_q{2};
  std::vector<std::string> v_claims;
  bool v_no_timing = false, v_list = false;
  verify_cmd->add_option("--n-max", v_n_max, "Largest dimension")->check(CLI::Range(2, 63));
  verify_cmd->add_option("--q", v_q, "Field orders")->delimiter(',');
  verify_cmd->add_option("--claims", v_claims, "Only these claim ids")->delimiter(',');
  verify_cmd->add_flag("--no-timing", v_no_timing, "Omit runtime_ms from reports");
  verify_cmd->add_flag("--list", v_list, "List claim ids and exit");

  // export
  auto* export_cmd = app.add_subcommand("export", "Re-serialize a graph or derived artifact");
  std::string ex_file, ex_in_format, ex_what = "graph", ex_format, ex_out;
  export_cmd->add_option("file", ex_file, "Graph file")->required();
  export_cmd->add_option("--in-format", ex_in_format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"json", "edgelist", "dot"}));
  export_cmd->add_option("--what", ex_what, "graph, group or fixing-graph")
      ->check(CLI::IsMember({"graph", "group", "fixing-graph"}));
  export_cmd->add_option("--format", ex_format, "json, edgelist or dot")->check(CLI::IsMember({"json", "edgelist", "dot"}));
  export_cmd->add_option("--out", ex_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Limits limits = Limits::from_env();

    if (*generate) {
      Graph g = *gen_nzc ? build_nzc_graph(Space(gen_n, gen_q), limits) : build_family_graph(gen_k);
      emit(write_graph(g, parse_graph_format(gen_format)), gen_out);
      return kOk;
    }

    if (*analyze) {
      Graph g = load(an_file, an_format);
      Analysis a = analyze_graph(g, an_fixing_graph, limits);
      std::cout << (an_table ? analysis_to_table(a) : analysis_to_json(a).dump(2) + "\n");
      return kOk;
    }

    if (*verify_cmd) {
      if (v_list) {
        for (const auto& c : verify::claims()) std::cout << c.id << "  " << c.summary << "\n";
        return kOk;
      }
      auto reports = verify::run_suite(v_n_max, v_q, v_claims, limits);
      bool failed = false, capped = false;
      for (const auto& r : reports) {
        std::cout << verify::to_json(r, !v_no_timing).dump() << "\n";
        failed |= r.status == verify::Status::fail;
        capped |= r.status == verify::Status::resource_cap;
      }
      return failed ? kCheckFailed : capped ? kResource : kOk;
    }

    if (*export_cmd) {
      Graph g = load(ex_file, ex_in_format);
      if (ex_what == "graph") {
        GraphFormat fmt = ex_format.empty() ? GraphFormat::json : parse_graph_format(ex_format);
        emit(write_graph(g, fmt), ex_out);
        return kOk;
      }
      AutGroup group = automorphism_group(g, limits);
      if (ex_what == "group") {
        if (!ex_format.empty() && ex_format != "json") throw std::invalid_argument("groups export as json only");
        emit(group_to_json(group).dump(2) + "\n", ex_out);
        return kOk;
      }
      FixingGraph fg = build_fixing_graph(group);
      if (ex_format == "dot") emit(fixing_graph_to_dot(fg), ex_out);
      else if (ex_format.empty() || ex_format == "json") emit(fixing_graph_to_json(fg).dump(2) + "\n", ex_out);
      else throw std::invalid_argument("fixing graphs export as json or dot");
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
