// ecclab: generate graphs, build eccentric graphs and products, run theorem checks and
// print exact determinants.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecclab/catalog.hpp"
#include "ecclab/checks.hpp"
#include "ecclab/eccentric.hpp"
#include "ecclab/errors.hpp"
#include "ecclab/io.hpp"
#include "ecclab/product.hpp"
#include "ecclab/tree.hpp"

namespace {

using namespace ecclab;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::size_t parse_size(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw input_error("not a nonnegative integer: " + s);
  }
  if (used != s.size() || s.front() == '-') throw input_error("not a nonnegative integer: " + s);
  return static_cast<std::size_t>(v);
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("ECCLAB_JOBS")) {
    try {
      const std::size_t jobs = parse_size(env);
      if (jobs > 0) return jobs;
    } catch (const input_error&) {
    }
    std::cerr << "ecclab: ignoring ECCLAB_JOBS=" << env << "\n";
  }
  return 1;
}

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  std::string output;
};

int run_gen(const GenArgs& a) {
  std::vector<std::size_t> params;
  for (const auto& p : a.params) params.push_back(parse_size(p));
  GraphDocument doc;
  std::string name = a.family;
  for (const auto& p : a.params) name += " " + p;
  if (a.family == "random-tree") {
    if (params.size() != 1) throw input_error("random-tree takes 1 parameter");
    doc = GraphDocument::from_graph(random_tree(params[0], a.seed).graph(), name);
    doc.metadata = {{"seed", a.seed}};
  } else {
    const FamilySpec spec{parse_family(a.family), params};
    doc = GraphDocument::from_graph(build_family(spec), name);
  }
  emit(dump_graph_document(doc), a.output);
  return 0;
}

struct EccArgs {
  std::string input;
  bool matrix = false;
  std::string format = "json";
  std::string output;
};

int run_ecc(const EccArgs& a) {
  const GraphDocument in = load_graph_document(a.input);
  const Graph g = in.to_graph();
  if (a.matrix) {
    if (a.format != "json") throw input_error("matrices are only written as JSON");
    emit(matrix_to_json(eccentricity_matrix(g)).dump() + "\n", a.output);
    return 0;
  }
  GraphDocument out = GraphDocument::from_graph(eccentric_graph(g));
  out.name = "E(" + in.name.value_or("G") + ")";
  out.labels = in.labels;
  emit(a.format == "dot" ? to_dot(out) : dump_graph_document(out), a.output);
  return 0;
}

struct ProductArgs {
  std::vector<std::string> inputs;
  std::string kind = "cartesian";
  std::size_t cap = kDefaultProductCap;
  std::string output;
};

int run_product(const ProductArgs& a) {
  std::vector<Graph> factors;
  std::vector<std::string> names;
  for (const auto& path : a.inputs) {
    const GraphDocument doc = load_graph_document(path);
    factors.push_back(doc.to_graph());
    names.push_back(doc.name.value_or(path));
  }
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) sizes.push_back(f.num_vertices());
  const ProductIndexMap index(sizes);
  if (index.size() > a.cap) throw resource_error("product exceeds the vertex cap");

  Graph product;
  std::string joiner;
  if (a.kind == "cartesian") {
    product = cartesian_product(factors, a.cap).graph;
    joiner = " [] ";
  } else {
    product = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) {
      product = kronecker_product_graph(product, factors[i], a.cap);
    }
    joiner = " x ";
  }

  std::string name;
  for (std::size_t i = 0; i < names.size(); ++i) name += (i ? joiner : "") + names[i];
  GraphDocument doc = GraphDocument::from_graph(product, name);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < index.size(); ++v) {
    std::string label = "(";
    const auto t = index.tuple(v);
    for (std::size_t i = 0; i < t.size(); ++i) label += (i ? "," : "") + std::to_string(t[i]);
    labels.push_back(label + ")");
  }
  doc.labels = std::move(labels);
  doc.metadata = {{"kind", a.kind},
                  {"factor_sizes", sizes},
                  {"index_map", "row-major, first factor most significant"}};
  emit(dump_graph_document(doc), a.output);
  return 0;
}

struct CheckArgs {
  std::string suite;
  checks::Options options;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> jobs;
  std::string report;
};

int run_check(CheckArgs a) {
  a.options.samples = a.samples;
  a.options.jobs = a.jobs.value_or(default_jobs());
  if (a.options.jobs == 0) throw input_error("--jobs must be positive");
  const checks::Report r = checks::run_check(a.suite, a.options);
  std::cout << checks::to_text(r) << "seed: " << a.options.seed << "\n";
  const std::string path = a.report.empty() ? "check-" + a.suite + ".json" : a.report;
  write_text_file(path, checks::to_json(r).dump(2) + "\n");
  std::cout << "report: " << path << "\n";
  return r.passed() ? 0 : kExitCheckFailed;
}

int run_det(const std::string& input) {
  const Graph g = load_graph_document(input).to_graph();
  std::cout << to_decimal(determinant(eccentricity_matrix(g))) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eccentric graphs, eccentricity matrices and product checks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a family graph as a JSON document");
  gen_cmd->add_option("family", gen.family,
                      "path cycle star double-star complete complete-bipartite h-graph grid "
                      "hypercube random-tree")
      ->required();
  gen_cmd->add_option("params", gen.params, "Family parameters");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random-tree");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  EccArgs ecc;
  auto* ecc_cmd = app.add_subcommand("ecc", "Eccentric graph or eccentricity matrix");
  ecc_cmd->add_option("input", ecc.input, "Graph document")->required()->check(CLI::ExistingFile);
  auto* as_matrix = ecc_cmd->add_flag("--matrix", ecc.matrix, "Write the eccentricity matrix");
  ecc_cmd->add_flag("--graph", "Write the eccentric graph (default)")->excludes(as_matrix);
  ecc_cmd->add_option("--format", ecc.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  ecc_cmd->add_option("-o,--output", ecc.output, "Output file (default stdout)");

  ProductArgs prod;
  auto* prod_cmd = app.add_subcommand("product", "Cartesian or Kronecker product");
  prod_cmd->add_option("inputs", prod.inputs, "Graph documents")
      ->required()
      ->expected(2, -1)
      ->check(CLI::ExistingFile);
  prod_cmd->add_option("--kind", prod.kind, "cartesian or kronecker")
      ->check(CLI::IsMember({"cartesian", "kronecker"}));
  prod_cmd->add_option("--cap", prod.cap, "Maximum product vertex count");
  prod_cmd->add_option("-o,--output", prod.output, "Output file (default stdout)");

  CheckArgs chk;
  auto* chk_cmd = app.add_subcommand("check", "Run a theorem-check suite");
  chk_cmd->add_option("suite", chk.suite, "Suite name")->required();
  chk_cmd->add_option("--trees-max-n", chk.options.trees_max_n, "Largest exhaustive tree size")
      ->check(CLI::Range(std::size_t{1}, kMaxEnumeratedTreeSize));
  chk_cmd->add_option("--samples", chk.samples, "Random cases (suite default when omitted)");
  chk_cmd->add_option("--seed", chk.options.seed, "Base seed");
  chk_cmd->add_option("--jobs", chk.jobs, "Worker threads (default ECCLAB_JOBS or 1)");
  chk_cmd->add_option("--report", chk.report, "JSON report path (default check-<suite>.json)");

  std::string det_input;
  auto* det_cmd = app.add_subcommand("det", "Exact determinant of the eccentricity matrix");
  det_cmd->add_option("input", det_input, "Graph document")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (ecc_cmd->parsed()) return run_ecc(ecc);
    if (prod_cmd->parsed()) return run_product(prod);
    if (chk_cmd->parsed()) return run_check(chk);
    if (det_cmd->parsed()) return run_det(det_input);
  } catch (const std::exception& e) {
    // Input, domain and cap errors all surface here.
    std::cerr << "ecclab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
