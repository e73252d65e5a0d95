// egr: build, verify, export and bound the finite-geometry egr/agr graphs.
//
// Exit codes: 0 success / claim holds, 1 claim mismatch, 2 usage or
// precondition error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "egr/egr.hpp"
#include "json.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct Options {
  std::optional<std::uint32_t> q, n;
  std::optional<std::uint32_t> epsilon, eta;
  std::string name;
  std::string format = "graph6";
  std::string out;
  std::string claim_path;
  std::string graph_path;
  unsigned workers = 0;
  std::size_t oracle_cap = egr::default_oracle_cap;

  std::optional<std::int64_t> k, g, lambda;
  std::vector<std::int64_t> signature;
  std::string lambda_range;
  bool bipartite = false;

  std::vector<std::string> only;
  std::optional<std::size_t> max_n;
  bool slow = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw egr::precondition_error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw egr::precondition_error("cannot write '" + path + "'");
  out << data;
}

egr::BuildParams build_params(const Options& o) {
  return {o.q, o.n, o.epsilon, o.eta};
}

void add_construction_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "field order (prime power)");
  cmd->add_option("--n", o.n, "projective dimension for pg-incidence");
  cmd->add_option("--epsilon", o.epsilon, "epsilon as a field element code");
  cmd->add_option("--eta", o.eta, "eta as a field element code");
}

int cmd_build(const Options& o) {
  const auto c = egr::build_construction(o.name, build_params(o));
  write_output(o.out, egr::export_graph(c.graph, egr::parse_graph_format(o.format), o.workers));
  std::string claim_path = o.claim_path;
  if (claim_path.empty() && !o.out.empty() && o.out != "-") claim_path = o.out + ".claim.json";
  if (!claim_path.empty()) write_output(claim_path, egr::claim_json(c.claim).dump(2) + "\n");
  std::cerr << c.claim.construction << ": " << c.graph.order() << " vertices, " << c.graph.size() << " edges\n";
  return exit_ok;
}

int cmd_verify(const Options& o) {
  egr::VerificationReport rep;
  const egr::VerifyOptions vo{o.workers, o.oracle_cap};
  if (!o.name.empty()) {
    if (!o.graph_path.empty()) throw egr::precondition_error("give either --construction or --graph, not both");
    rep = egr::verify(egr::build_construction(o.name, build_params(o)), vo);
  } else {
    if (o.graph_path.empty() || o.claim_path.empty())
      throw egr::precondition_error("verify needs --construction, or --graph together with --claim");
    const auto graph = egr::read_graph(read_file(o.graph_path));
    nlohmann::ordered_json claim;
    try {
      claim = nlohmann::ordered_json::parse(read_file(o.claim_path));
    } catch (const nlohmann::ordered_json::parse_error& e) {
      throw egr::precondition_error(std::string("cannot parse claim: ") + e.what());
    }
    rep = egr::verify(graph, egr::claim_from_json(claim), vo);
  }
  std::cout << egr::report_json(rep).dump(2) << "\n";
  return rep.passed ? exit_ok : exit_mismatch;
}

int cmd_bounds(const Options& o) {
  egr::BoundQuery q;
  q.k = *o.k;
  q.g = *o.g;
  q.lambda = o.lambda;
  q.signature = o.signature;
  q.bipartite = o.bipartite;
  std::cout << egr::bound_report_json(egr::evaluate_bounds(q)).dump(2) << "\n";
  return exit_ok;
}

int cmd_sweep(const Options& o) {
  const std::int64_t k = *o.k, g = *o.g;
  std::int64_t lo = 1, hi = egr::lambda_max(k, g);
  if (!o.lambda_range.empty()) {
    const auto colon = o.lambda_range.find(':');
    try {
      if (colon == std::string::npos) {
        lo = hi = std::stoll(o.lambda_range);
      } else {
        lo = std::stoll(o.lambda_range.substr(0, colon));
        hi = std::stoll(o.lambda_range.substr(colon + 1));
      }
    } catch (const std::exception&) {
      throw egr::precondition_error("--lambda expects lo:hi");
    }
  }
  write_output(o.out, egr::sweep_csv(egr::sweep(k, g, lo, hi, o.bipartite)));
  return exit_ok;
}

int cmd_export(const Options& o) {
  const auto format = egr::parse_graph_format(o.format);
  if (!o.graph_path.empty()) {
    write_output(o.out, egr::export_graph(egr::read_graph(read_file(o.graph_path)), format, o.workers));
    return exit_ok;
  }
  if (o.name.empty()) throw egr::precondition_error("export needs a construction name or --graph");
  write_output(o.out, egr::export_graph(egr::build_construction(o.name, build_params(o)).graph, format, o.workers));
  return exit_ok;
}

int cmd_reproduce(const Options& o) {
  egr::ReproduceOptions ro;
  ro.only = o.only;
  ro.max_n = o.max_n;
  ro.slow = o.slow;
  ro.workers = o.workers;
  ro.oracle_cap = o.oracle_cap;
  ro.on_row = [](const egr::RowResult& r) { std::cout << egr::format_row(r) << std::endl; };
  const auto results = egr::run_reproduction(ro);
  std::cout << "\n";
  bool all = true;
  for (const auto& c : results) {
    std::cout << egr::format_criterion(c) << "\n";
    all = all && c.passed();
  }
  return all ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-girth-regular graphs from finite geometries"};
  app.require_subcommand(1);
  Options o;

  std::string names;
  for (const auto& n : egr::construction_names()) names += (names.empty() ? "" : ", ") + n;

  auto* build = app.add_subcommand("build", "build a construction and write the graph and its claim");
  build->add_option("name", o.name, "construction: " + names)->required();
  add_construction_flags(build, o);
  build->add_option("--format", o.format, "graph6, edgelist or json");
  build->add_option("-o,--out", o.out, "graph output file (default stdout)");
  build->add_option("--claim", o.claim_path, "claim output file (default <out>.claim.json)");
  build->add_option("--workers", o.workers, "census threads for json output (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "check a claim against a full girth-cycle census");
  verify->add_option("--construction", o.name, "construction: " + names);
  add_construction_flags(verify, o);
  verify->add_option("--graph", o.graph_path, "graph file (graph6 or edge list)");
  verify->add_option("--claim", o.claim_path, "claim JSON file");
  verify->add_option("--workers", o.workers, "census threads (0 = all cores)");
  verify->add_option("--oracle-cap", o.oracle_cap, "largest order checked by the census oracle");

  auto* bounds = app.add_subcommand("bounds", "evaluate every lower bound");
  bounds->add_option("--k", o.k, "degree")->required();
  bounds->add_option("--g", o.g, "girth")->required();
  auto* lam = bounds->add_option("--lambda", o.lambda, "girth cycles per edge");
  auto* sig = bounds->add_option("--signature", o.signature, "signature a1,...,ak")->delimiter(',');
  lam->excludes(sig);
  bounds->add_flag("--bipartite", o.bipartite, "use the bipartite variants");

  auto* sweep = app.add_subcommand("sweep", "tabulate egr bounds over a lambda range as CSV");
  sweep->add_option("--k", o.k, "degree")->required();
  sweep->add_option("--g", o.g, "even girth")->required();
  sweep->add_option("--lambda", o.lambda_range, "lambda range lo:hi (default 1:(k-1)^(g/2))");
  sweep->add_flag("--bipartite", o.bipartite, "use the bipartite variants");
  sweep->add_option("-o,--out", o.out, "CSV output file (default stdout)");

  auto* exp = app.add_subcommand("export", "write a construction or a graph file in another format");
  exp->add_option("name", o.name, "construction: " + names);
  add_construction_flags(exp, o);
  exp->add_option("--graph", o.graph_path, "graph file (graph6 or edge list)");
  exp->add_option("--format", o.format, "graph6, edgelist or json");
  exp->add_option("-o,--out", o.out, "output file (default stdout)");
  exp->add_option("--workers", o.workers, "census threads for json output (0 = all cores)");

  auto* repro = app.add_subcommand("reproduce", "run the full verification matrix");
  repro->add_option("--only", o.only, "groups (deletion/sec2, amalgam/sec3, bounds/sec4), criteria or rows")
      ->delimiter(',');
  repro->add_option("--max-n", o.max_n, "skip graphs with more vertices");
  repro->add_flag("--slow", o.slow, "include the long-running optional rows");
  repro->add_option("--workers", o.workers, "census threads (0 = all cores)");
  repro->add_option("--oracle-cap", o.oracle_cap, "largest order checked by the census oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (verify->parsed()) return cmd_verify(o);
    if (bounds->parsed()) return cmd_bounds(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (exp->parsed()) return cmd_export(o);
    if (repro->parsed()) return cmd_reproduce(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
