#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace csgin::acceptance {

struct Options {
  std::vector<std::uint64_t> seeds{1, 2, 3};  // gin seeds
  std::uint64_t corpus_seed = 2718;            // draws of random spaces, systems and orders
  bool enforce_budgets = true;
};

struct Outcome {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // summary on success, first counterexample on failure
  double seconds = 0;
  double budget_seconds = 0;
};

/// Runs the nine acceptance criteria in order. Criterion 8 consumes the monomial
/// ideals produced by criteria 1-7, so the suite always runs as a whole.
std::vector<Outcome> run_all(const Options& options = {},
                             const std::function<void(const Outcome&)>& on_outcome = {});

}  // namespace csgin::acceptance
