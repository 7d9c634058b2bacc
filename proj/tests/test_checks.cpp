#include <gtest/gtest.h>

#include <atomic>

#include "ecclab/checks.hpp"

using namespace ecclab;
using checks::Failure;
using checks::Options;
using checks::Phase;

TEST(RunPhases, CountsAndSortsFailures) {
  const std::vector<Phase> phases{
      {"a", 10,
       [](std::size_t i) -> std::optional<Failure> {
         if (i % 3 == 0) return Failure{"z" + std::to_string(i), "even", "odd"};
         return std::nullopt;
       }},
      {"b", 5, [](std::size_t i) -> std::optional<Failure> {
         if (i == 4) return Failure{"b4", "x", "y"};
         return std::nullopt;
       }}};
  for (std::size_t jobs : {1u, 4u}) {
    const auto r = checks::run_phases("demo", {{"k", 1}}, phases, jobs);
    EXPECT_EQ(r.fail_count, 5u);
    EXPECT_EQ(r.pass_count, 10u);
    ASSERT_TRUE(r.first_failure.has_value());
    EXPECT_EQ(r.first_failure->input, "b4");
    EXPECT_FALSE(r.passed());
  }
}

TEST(RunPhases, ExceptionsBecomeFailures) {
  const std::vector<Phase> phases{{"p", 2, [](std::size_t i) -> std::optional<Failure> {
    if (i == 1) throw input_error("boom");
    return std::nullopt;
  }}};
  const auto r = checks::run_phases("demo", {}, phases, 1);
  EXPECT_EQ(r.fail_count, 1u);
  EXPECT_NE(r.first_failure->actual.find("boom"), std::string::npos);
}

TEST(RunPhases, EveryCaseRunsOnceUnderThreads) {
  std::vector<std::atomic<int>> hits(1000);
  const std::vector<Phase> phases{{"p", hits.size(), [&](std::size_t i) -> std::optional<Failure> {
    ++hits[i];
    return std::nullopt;
  }}};
  const auto r = checks::run_phases("demo", {}, phases, 8);
  EXPECT_EQ(r.pass_count, 1000u);
  for (const auto& h : hits) ASSERT_EQ(h.load(), 1);
}

TEST(Report, JsonShape) {
  checks::Report r;
  r.check_name = "x";
  r.pass_count = 3;
  const json ok = checks::to_json(r);
  EXPECT_TRUE(ok["first_failure"].is_null());
  EXPECT_TRUE(ok["passed"].get<bool>());
  r.fail_count = 1;
  r.first_failure = Failure{"in", "e", "a"};
  const json bad = checks::to_json(r);
  EXPECT_EQ(bad["first_failure"]["input"], "in");
  EXPECT_FALSE(bad["passed"].get<bool>());
}

TEST(Suites, NamesAndUnknown) {
  const auto names = checks::suite_names();
  for (const char* want : {"tree-girth", "structure", "monotone", "additivity", "componentwise",
                           "product-girth", "grid", "cycle-product", "cncn-iso", "kronecker-det",
                           "invertibility"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
  }
  EXPECT_THROW(checks::run_check("no-such-suite", {}), input_error);
}

TEST(Suites, SmallRunsPass) {
  Options o;
  o.trees_max_n = 6;
  o.samples = 20;
  o.jobs = 2;
  for (const auto& name : checks::suite_names()) {
    if (name == "grid-parity-all") continue;
    const auto r = checks::run_check(name, o);
    EXPECT_TRUE(r.passed()) << name << ": " << checks::to_text(r);
    EXPECT_GT(r.pass_count, 0u) << name;
  }
}

TEST(Suites, ReportIsIndependentOfJobs) {
  Options o;
  o.trees_max_n = 5;
  o.samples = 30;
  o.seed = 9;
  o.jobs = 1;
  const auto a = checks::run_check("grid-parity-all", o);
  o.jobs = 3;
  const auto b = checks::run_check("grid-parity-all", o);
  EXPECT_EQ(a.fail_count, b.fail_count);
  ASSERT_TRUE(a.first_failure && b.first_failure);
  EXPECT_EQ(a.first_failure->input, b.first_failure->input);
  // Fails exactly where one side is 2 and the other odd: (2, 3), (2, 5), (2, 7) and mirrors.
  EXPECT_EQ(a.fail_count, 6u);
  EXPECT_EQ(a.first_failure->actual, "girth 6");
}

TEST(TreeCorpus, ExhaustiveThenRandom) {
  const checks::detail::TreeCorpus c(5, 10, 3);
  EXPECT_EQ(c.exhaustive_count(), 1u + 3u + 16u + 125u);
  EXPECT_EQ(c.size(), 155u);
  EXPECT_EQ(c.at(0).num_vertices(), 2u);
  EXPECT_EQ(c.at(144).num_vertices(), 5u);
  for (std::size_t i = 145; i < 155; ++i) {
    const auto n = c.at(i).num_vertices();
    EXPECT_TRUE(n >= 9 && n <= 40);
    EXPECT_EQ(c.at(i), c.at(i));
  }
  EXPECT_THROW(checks::detail::TreeCorpus(9, 0, 1), unsupported_size_error);
}
