// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ecclab/checks.hpp"
#include "fixtures.hpp"

using namespace ecclab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from_reports(const std::vector<checks::Report>& reports, double limit_seconds = 0) {
  Outcome o{true, ""};
  double seconds = 0;
  for (const auto& r : reports) {
    seconds += r.wall_time_seconds;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += r.check_name + " " + std::to_string(r.pass_count) + "/" +
                std::to_string(r.pass_count + r.fail_count);
    if (!r.passed()) {
      o.pass = false;
      o.detail += " first failure " + r.first_failure->input + " expected " +
                  r.first_failure->expected + " got " + r.first_failure->actual;
    }
  }
  std::ostringstream t;
  t << std::fixed << std::setprecision(2) << seconds;
  o.detail += "; " + t.str() + " s";
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    o.pass = false;
    o.detail += " over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit";
  }
  return o;
}

checks::Options single_threaded() {
  checks::Options o;
  o.jobs = 1;
  return o;
}

Outcome example_tree_fixture() {
  const Tree t = fixture::example_tree();
  const auto paths = diametrical_paths(t);
  if (paths.size() != 3) return {false, std::to_string(paths.size()) + " diametrical paths"};
  std::size_t matched = 0;
  for (const auto& c : fixture::induced_cases()) {
    for (const auto& p : paths) {
      auto a = p.vertices;
      auto b = c.path;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) continue;
      const auto sub = induced_subtree(t, p, paths);
      if (sub.vertices == c.vertices && sub.lift(eccentric_graph(sub.tree.graph()), 12) == c.eccentric) {
        ++matched;
      }
    }
  }
  if (matched != 3) return {false, std::to_string(matched) + "/3 induced subtrees match"};
  const Graph e = eccentric_graph(t.graph());
  const Graph fig = fixture::example_eccentric_graph();
  if (e != fig) return {false, "E(T) differs from the transcribed figure"};
  return {true, "3 paths, 3 induced subtrees, E(T) equals the figure (" +
                    std::to_string(fig.num_edges()) + " edges)"};
}

Outcome cli_contract() {
  const std::string cmd = std::string("'") + ECCLAB_CLI_TESTS + "' --gtest_brief=1 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {false, "could not start the CLI test binary"};
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  const bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  const auto line = out.find("PASSED");
  return {ok, ok && line != std::string::npos ? out.substr(line, out.find('\n', line) - line)
                                              : "CLI integration tests failed"};
}

}  // namespace

int main() {
  const checks::Options o = single_threaded();
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "catalog exactness",
       [&] { return from_reports({checks::run_check("catalog", o)}, 5); }},
      {2, "tree eccentric girth, exhaustive n <= 8 plus 1000 random",
       [&] { return from_reports({checks::run_check("tree-girth", o)}, 180); }},
      {3, "structure theorem and monotone exclusion on the tree corpus",
       [&] {
         return from_reports({checks::run_check("structure", o), checks::run_check("monotone", o)});
       }},
      {4, "12-vertex example tree fixture", [] { return example_tree_fixture(); }},
      {5, "additivity and componentwise eccentricity, 200 products",
       [&] {
         return from_reports(
             {checks::run_check("additivity", o), checks::run_check("componentwise", o)});
       }},
      {6, "tree product girth, 300 tuples plus witnesses",
       [&] { return from_reports({checks::run_check("product-girth", o)}); }},
      {7, "grid closed form and parity rule, 3 <= m,n <= 8, m = 2 case",
       [&] { return from_reports({checks::run_check("grid", o)}); }},
      {8, "cycle products 3..10 and the C_n [] C_n isomorphism",
       [&] {
         return from_reports(
             {checks::run_check("cycle-product", o), checks::run_check("cncn-iso", o)});
       }},
      {9, "E(G [] H) == E(G) x E(H) for 30 self-centered pairs",
       [&] { return from_reports({checks::run_check("kronecker-corr", o)}); }},
      {10, "exact determinants: Bareiss vs Leibniz, Kronecker identity, E(S_3)",
       [&] { return from_reports({checks::run_check("kronecker-det", o)}); }},
      {11, "invertibility classification of T [] P_2^j",
       [&] { return from_reports({checks::run_check("invertibility", o)}, 300); }},
      {12, "CLI contract", [] { return cli_contract(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failed += out.pass ? 0 : 1;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  "
              << c.title << "  [" << out.detail << "]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
