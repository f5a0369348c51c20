// Copyright 2026 The Smokegen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails or overruns its time budget.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "src/catalog.h"
#include "src/combinatorics.h"
#include "src/datagen.h"
#include "src/descriptor.h"
#include "src/random_stream.h"
#include "src/report.h"
#include "src/runner.h"
#include "tests/random_descriptor.h"
#include "tests/test_util.h"

namespace smokegen {
namespace {

namespace fs = std::filesystem;
using testing::OracleQuantile;
using testing::SourcePath;
using testing::TempDir;

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ |= !ok;
  }
  bool failed() const { return failed_; }
  std::string Describe() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

std::string Str(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void J48Expansion(Check& c) {
  const AlgorithmDescriptor d =
      LoadDescriptor(SourcePath("fixtures/descriptors/j48_unpruned.yaml"));
  const std::size_t n = Expand(d).size();
  c.Expect(n == 6, "unpruned fixture expands to " + std::to_string(n));
}

void ExhaustiveCount(Check& c) {
  AlgorithmDescriptor d;
  d.name = "GRID";
  d.features = {FeatureKind::kNumeric};
  for (int i = 0; i < 8; ++i) {
    ParameterSpec p;
    p.name = "b" + std::to_string(i);
    p.spec = FlagParam{FlagState::kDisabled};
    d.parameters.push_back(p);
  }
  for (int i = 0; i < 2; ++i) {
    ParameterSpec p;
    p.name = "t" + std::to_string(i);
    p.spec = ValueListParam{
        {std::string("x"), std::string("y"), std::string("z")},
        std::string("x")};
    d.parameters.push_back(p);
  }
  const std::uint64_t n = CountExhaustive(d);
  c.Expect(n == 2304, "count_exhaustive = " + std::to_string(n));
}

void Linearity(Check& c) {
  RandomStream rng(20260417);
  for (int trial = 0; trial < 1000 && !c.failed(); ++trial) {
    const AlgorithmDescriptor d = testing::RandomDescriptor(rng, 20, 5);
    c.Expect(d.parameters.size() <= 20, "too many parameters generated");
    const auto combos = Expand(d);
    std::size_t expected = 1;
    for (const auto& p : d.parameters) {
      const auto cands = CandidateValues(p);
      c.Expect(cands.size() <= 5, "too many candidates generated");
      for (const auto& v : cands) expected += !SameValue(v, p.DefaultValue());
    }
    c.Expect(combos.size() == expected,
             "trial " + std::to_string(trial) + ": |expand| " +
                 std::to_string(combos.size()) + " != " +
                 std::to_string(expected));
    if (combos.empty()) return;
    for (std::size_t i = 0; i < d.parameters.size(); ++i) {
      c.Expect(SameValue(combos[0].assignment[i].second,
                         d.parameters[i].DefaultValue()),
               "first combination is not all defaults");
    }
    for (std::size_t k = 1; k < combos.size(); ++k) {
      int diffs = 0;
      for (std::size_t i = 0; i < d.parameters.size(); ++i) {
        diffs += !SameValue(combos[k].assignment[i].second,
                            combos[0].assignment[i].second);
      }
      c.Expect(diffs == 1, "trial " + std::to_string(trial) + " combination " +
                               std::to_string(k) + " differs in " +
                               std::to_string(diffs) + " keys");
    }
    for (std::size_t i = 0; i < d.parameters.size(); ++i) {
      for (const auto& v : CandidateValues(d.parameters[i])) {
        bool seen = false;
        for (const auto& combo : combos) {
          seen |= SameValue(combo.assignment[i].second, v);
        }
        c.Expect(seen, "candidate " + FormatValue(v) + " of " +
                           d.parameters[i].name + " never used");
      }
    }
  }
}

// Rectangle labels recomputed from the features alone: per-feature
// nearest-rank quantile at 2^(-1/m), class_1 iff every value is below it.
std::vector<bool> OracleRectangle(const Dataset& ds) {
  const std::size_t m = ds.train_features.size();
  const std::size_t n = ds.train_features[0].size();
  const double p = std::pow(2.0, -1.0 / static_cast<double>(m));
  std::vector<bool> inside(n, true);
  for (const auto& col : ds.train_features) {
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = col.ValueAt(i);
    const double q = OracleQuantile(values, p);
    for (std::size_t i = 0; i < n; ++i) inside[i] = inside[i] && values[i] < q;
  }
  return inside;
}

void RectangleBalance(Check& c) {
  for (const char* name : {"UNIFORM", "LEFTSKEW", "RIGHTSKEW"}) {
    const SmokeTestSpec spec = *FindSmokeTest(name, Mode::kClassification);
    for (std::size_t m : {1, 2, 5}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Dataset ds = GenerateDataset(spec, seed, 10000, m);
        const std::vector<bool> oracle = OracleRectangle(ds);
        const double frac =
            std::count(oracle.begin(), oracle.end(), true) / 10000.0;
        const std::string where = std::string(name) + " m=" +
                                  std::to_string(m) + " seed=" +
                                  std::to_string(seed);
        c.Expect(frac >= 0.45 && frac <= 0.55,
                 where + ": class_1 fraction " + Str(frac));
        // The emitted labels are the oracle labels with ~10% flipped.
        std::size_t flipped = 0;
        for (std::size_t i = 0; i < oracle.size(); ++i) {
          flipped += oracle[i] != (ds.train_labels[i] == Label::kClass1);
        }
        const double rate = flipped / 10000.0;
        c.Expect(rate > 0.08 && rate < 0.12,
                 where + ": label flip rate " + Str(rate));
      }
    }
  }
}

void GammaMoments(Check& c) {
  for (std::uint64_t seed : {1, 2, 3}) {
    RandomStream rng(seed);
    const FeatureColumn col = SampleGamma(rng, 100000, {0.1, 4.0});
    const auto& v = col.numeric();
    double mean = 0;
    for (double x : v) mean += x;
    mean /= v.size();
    double var = 0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= v.size() - 1;
    const std::string s = "seed " + std::to_string(seed);
    c.Expect(std::abs(mean - 0.4) <= 0.4 * 0.05, s + ": mean " + Str(mean));
    c.Expect(std::abs(var - 1.6) <= 1.6 * 0.25, s + ": variance " + Str(var));
  }
}

struct ExpectedEntry {
  const char* id;
  FeatureKind kind;
  LabelStrategy labels;
};

void CatalogStructure(Check& c) {
  using enum FeatureKind;
  using enum LabelStrategy;
  const std::vector<ExpectedEntry> expected = {
      {"UNIFORM", kNumeric, kRectangle},
      {"CATEGORICAL", kCategorical, kRectangle},
      {"MINFLOAT", kNumeric, kRectangle},
      {"VERYSMALL", kNumeric, kRectangle},
      {"MINDOUBLE", kNumeric, kRectangle},
      {"MAXFLOAT", kNumeric, kRectangle},
      {"VERYLARGE", kNumeric, kRectangle},
      {"MAXDOUBLE", kNumeric, kRectangle},
      {"SPLIT", kNumeric, kRandom},
      {"LEFTSKEW", kNumeric, kRectangle},
      {"RIGHTSKEW", kNumeric, kRectangle},
      {"ONECLASS", kNumeric, kOneClass},
      {"BIAS", kNumeric, kBias},
      {"OUTLIER", kNumeric, kRectangle},
      {"ZEROS", kNumeric, kRectangle},
      {"RANDNUM", kNumeric, kRandom},
      {"RANDCAT", kCategorical, kRandom},
      {"DISJNUM", kNumeric, kRectangle},
      {"DISJCAT", kCategorical, kRectangle},
      {"MANYCATS", kCategorical, kRectangle},
      {"STARVEDMANY", kCategorical, kRandom},
      {"STARVEDBINARY", kCategorical, kRectangle},
  };
  const auto& tests = ClassificationTests();
  c.Expect(tests.size() == 22,
           std::to_string(tests.size()) + " classification tests");
  if (tests.size() != expected.size()) return;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const std::string id(tests[i].name());
    c.Expect(id == expected[i].id, "entry " + std::to_string(i) + " is " + id);
    c.Expect(tests[i].feature_kind == expected[i].kind, id + ": feature kind");
    c.Expect(tests[i].label_strategy == expected[i].labels,
             id + ": label strategy");
    const bool distinct = id == "DISJNUM" || id == "DISJCAT";
    c.Expect((tests[i].test_partition == TestPartitionRule::kDistinct) ==
                 distinct,
             id + ": test partition rule");
  }

  constexpr std::size_t n = 500, m = 4;
  auto gen = [&](const char* id) {
    return GenerateDataset(*FindSmokeTest(id, Mode::kClassification), 11, n, m);
  };
  auto all_within = [](const std::vector<FeatureColumn>& cols, double lo,
                       double hi) {
    for (const auto& col : cols) {
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (!(col.ValueAt(i) >= lo && col.ValueAt(i) <= hi)) return false;
      }
    }
    return true;
  };

  const std::map<std::string, std::pair<double, double>> ranges = {
      {"UNIFORM", {0, 1}},          {"MINFLOAT", {0, 1e-6}},
      {"VERYSMALL", {0, 1e-10}},    {"MINDOUBLE", {0, 1e-15}},
      {"MAXFLOAT", {0, 3.4e38}},    {"VERYLARGE", {0, 1e100}},
      {"MAXDOUBLE", {0, 1.7e308}},  {"ONECLASS", {0, 1}},
      {"BIAS", {0, 1}},             {"RANDNUM", {0, 1}},
      {"RIGHTSKEW", {0, INFINITY}}, {"LEFTSKEW", {-INFINITY, 0}},
  };
  for (const auto& [id, range] : ranges) {
    c.Expect(all_within(gen(id.c_str()).train_features, range.first,
                        range.second),
             id + ": values outside [" + Str(range.first) + ", " +
                 Str(range.second) + "]");
  }

  {
    const Dataset ds = gen("SPLIT");
    bool ok = true;
    for (const auto& col : ds.train_features) {
      for (double v : col.numeric()) {
        ok &= (v >= 0 && v <= 1e-5) || (v >= 1e10 && v <= 1e11);
      }
    }
    c.Expect(ok, "SPLIT: value outside both modes");
  }
  {
    const Dataset ds = gen("ZEROS");
    c.Expect(all_within(ds.train_features, 0, 0), "ZEROS: nonzero value");
  }
  {
    const Dataset ds = gen("OUTLIER");
    std::size_t outliers = 0;
    bool rest_small = true;
    for (std::size_t i = 0; i < n; ++i) {
      bool all_big = true;
      bool all_small = true;
      for (const auto& col : ds.train_features) {
        all_big &= col.ValueAt(i) == 1e10;
        all_small &= col.ValueAt(i) >= 0 && col.ValueAt(i) <= 1e-5;
      }
      outliers += all_big;
      rest_small &= all_big || all_small;
    }
    c.Expect(outliers == 1, "OUTLIER: " + std::to_string(outliers) +
                                " instances at 1e10");
    c.Expect(rest_small, "OUTLIER: non-outlier outside [0, 1e-5]");
  }
  {
    const Dataset ds = gen("ONECLASS");
    c.Expect(std::all_of(ds.train_labels.begin(), ds.train_labels.end(),
                         [](Label l) { return l == Label::kClass0; }),
             "ONECLASS: mixed labels");
    const Dataset bias = gen("BIAS");
    c.Expect(std::count(bias.train_labels.begin(), bias.train_labels.end(),
                        Label::kClass1) == 1,
             "BIAS: class_1 count is not 1");
  }
  {
    const Dataset ds = gen("DISJNUM");
    c.Expect(ds.distinct_test, "DISJNUM: test partition not distinct");
    c.Expect(all_within(ds.train_features, 0, 1), "DISJNUM: train range");
    c.Expect(all_within(ds.test_features, 100, 101), "DISJNUM: test range");
  }
  {
    const Dataset ds = gen("DISJCAT");
    c.Expect(all_within(ds.train_features, 0, 9), "DISJCAT: train categories");
    c.Expect(all_within(ds.test_features, 10, 19), "DISJCAT: test categories");
  }
  {
    const Dataset ds = gen("CATEGORICAL");
    for (const auto& col : ds.train_features) {
      c.Expect(col.declared_categories().size() == 10,
               "CATEGORICAL: declared categories");
      c.Expect(std::set(col.ids().begin(), col.ids().end()).size() == 10,
               "CATEGORICAL: observed categories");
    }
  }
  {
    const Dataset ds = gen("MANYCATS");
    for (const auto& col : ds.train_features) {
      c.Expect(col.declared_categories().size() == 10000,
               "MANYCATS: declared categories");
    }
  }
  {
    const Dataset ds = gen("STARVEDMANY");
    for (const auto& col : ds.train_features) {
      c.Expect(std::set(col.ids().begin(), col.ids().end()).size() == n,
               "STARVEDMANY: categories are not unique per instance");
    }
  }
  {
    const Dataset ds = gen("STARVEDBINARY");
    for (std::size_t f = 0; f < ds.train_features.size(); ++f) {
      const auto& col = ds.train_features[f];
      const std::set<std::int64_t> observed(col.ids().begin(), col.ids().end());
      c.Expect(col.declared_categories() == std::vector<std::int64_t>{0, 1},
               "STARVEDBINARY: declared categories are not {0, 1}");
      c.Expect(observed.size() == 1,
               "STARVEDBINARY: feature " + std::to_string(f) +
                   " observes more than one category");
      if (f < 2) {
        c.Expect(observed == std::set<std::int64_t>{static_cast<int>(f)},
                 "STARVEDBINARY: feature " + std::to_string(f) +
                     " observes the wrong category");
      }
    }
  }
}

int Shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void Determinism(Check& c) {
  TempDir dir;
  const std::string cli = std::string("'") + SMOKEGEN_CLI_PATH + "'";
  for (const char* sub : {"a", "b"}) {
    const int rc = Shell(cli + " generate-data --seed 1234 -o '" +
                         (dir / sub).string() + "' >/dev/null 2>&1");
    c.Expect(rc == 0, "generate-data exited " + std::to_string(rc));
  }
  std::set<std::string> names_a, names_b;
  for (const auto& e : fs::directory_iterator(dir / "a")) {
    names_a.insert(e.path().filename());
  }
  for (const auto& e : fs::directory_iterator(dir / "b")) {
    names_b.insert(e.path().filename());
  }
  c.Expect(names_a == names_b, "different file sets");
  c.Expect(names_a.size() >= 22 * 3, "only " + std::to_string(names_a.size()) +
                                         " files written");
  std::size_t kinds[3] = {0, 0, 0};
  for (const auto& name : names_a) {
    kinds[0] += name.ends_with(".csv");
    kinds[1] += name.ends_with(".arff");
    kinds[2] += name.ends_with(".manifest.json");
    c.Expect(testing::Slurp(dir / "a" / name) == testing::Slurp(dir / "b" / name),
             name + " differs between runs");
  }
  c.Expect(kinds[0] > 0 && kinds[1] > 0 && kinds[2] == 22,
           "missing CSV, ARFF or manifest files");
}

std::vector<std::string> Mock(std::initializer_list<std::string> rules) {
  std::vector<std::string> argv = {SMOKEGEN_CLI_PATH, "mock-adapter"};
  for (const auto& r : rules) {
    argv.push_back("--rule");
    argv.push_back(r);
  }
  return argv;
}

void FaultInjection(Check& c) {
  TempDir dir;
  const AlgorithmDescriptor j48 =
      LoadDescriptor(SourcePath("fixtures/descriptors/j48_unpruned.yaml"));
  RunConfig base;
  base.work_dir = dir / "data";
  base.timeout = std::chrono::seconds(10);
  base.parallelism = 4;

  {
    RunConfig cfg = base;
    cfg.adapter_command = Mock({"fail-above-threshold=1e200"});
    cfg.tests = {"UNIFORM", "VERYLARGE", "MAXDOUBLE"};
    const std::vector<AlgorithmDescriptor> ds = {j48};
    const Report r = RunSuite(ds, cfg);
    c.Expect(r.records.size() == 18, "threshold campaign has " +
                                         std::to_string(r.records.size()) +
                                         " records");
    for (const auto& rec : r.records) {
      const Outcome want = rec.smoketest == "MAXDOUBLE" ? Outcome::kFailCrash
                                                        : Outcome::kPass;
      c.Expect(rec.outcome == want,
               rec.smoketest + "#" + std::to_string(rec.combination_index) +
                   " is " + std::string(OutcomeName(rec.outcome)));
    }
  }
  {
    RunConfig cfg = base;
    cfg.adapter_command = Mock({"sleep=ZEROS:60"});
    cfg.tests = {"UNIFORM", "ZEROS", "BIAS"};
    cfg.timeout_overrides["ZEROS"] = std::chrono::milliseconds(500);
    const std::vector<AlgorithmDescriptor> ds = {j48};
    const Report r = RunSuite(ds, cfg);
    c.Expect(r.records.size() == 18, "sleep campaign has " +
                                         std::to_string(r.records.size()) +
                                         " records");
    for (const auto& rec : r.records) {
      const Outcome want = rec.smoketest == "ZEROS" ? Outcome::kFailTimeout
                                                    : Outcome::kPass;
      c.Expect(rec.outcome == want,
               rec.smoketest + "#" + std::to_string(rec.combination_index) +
                   " is " + std::string(OutcomeName(rec.outcome)));
    }
  }
  {
    AlgorithmDescriptor d = j48;
    d.accepted_errors = {"requires more than 1 sample"};
    RunConfig cfg = base;
    cfg.adapter_command =
        Mock({"error=BIAS:ValueError:requires more than 1 sample per class",
              "error=ONECLASS:IndexError:index 1 is out of bounds"});
    cfg.tests = {"BIAS", "ONECLASS", "UNIFORM"};
    const std::vector<AlgorithmDescriptor> ds = {d};
    const Report r = RunSuite(ds, cfg);
    for (const auto& rec : r.records) {
      const Outcome want = rec.smoketest == "BIAS"       ? Outcome::kExpectedError
                           : rec.smoketest == "ONECLASS" ? Outcome::kFailCrash
                                                         : Outcome::kPass;
      c.Expect(rec.outcome == want,
               rec.smoketest + "#" + std::to_string(rec.combination_index) +
                   " is " + std::string(OutcomeName(rec.outcome)));
    }
  }
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<void(Check&)> body;
};

}  // namespace
}  // namespace smokegen

int main() {
  using smokegen::Check;
  const std::vector<smokegen::Criterion> criteria = {
      {"j48-expansion-count", 1, smokegen::J48Expansion},
      {"exhaustive-count-2304", 1, smokegen::ExhaustiveCount},
      {"linearity-property", 10, smokegen::Linearity},
      {"rectangle-balance", 30, smokegen::RectangleBalance},
      {"gamma-moments", 10, smokegen::GammaMoments},
      {"catalog-structure", 5, smokegen::CatalogStructure},
      {"generate-data-determinism", 5, smokegen::Determinism},
      {"fault-injection-mock-adapter", 60, smokegen::FaultInjection},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    check.Expect(secs < crit.budget_s,
                 "took " + smokegen::Str(secs) + " s, budget " +
                     smokegen::Str(crit.budget_s) + " s");
    if (check.failed()) ++failed;
    std::printf("%s %s (%.3f s)%s%s\n", check.failed() ? "FAIL" : "PASS",
                crit.name, secs, check.failed() ? ": " : "",
                check.Describe().c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
