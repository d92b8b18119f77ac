#pragma once

// Verification campaigns: every selected checker over all connected graphs up
// to a given order plus seeded random connected graphs.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gaindex/graph.hpp"

namespace gaindex {

struct SweepConfig {
  /// Exhaustive part over connected graphs with 1..exhaustive_nmax vertices
  /// (0 disables it; at most 7).
  int exhaustive_nmax = 7;
  int random_trials = 0;
  int random_nmin = 2;
  int random_nmax = 12;
  std::uint64_t seed = 42;
  /// Checker ids; empty or "all" selects every checker.
  std::vector<std::string> theorems;
  std::vector<double> alphas = {0.5, 1.0, 2.0};
  /// Also run the numeric lemmas on random real inputs, one each per trial.
  bool random_lemmas = true;
  /// 0 uses the hardware concurrency.
  unsigned threads = 0;
};

/// Counts for one report id (with "@alpha" appended for alpha-dependent
/// checkers).
struct TheoremTally {
  std::string id;
  long evaluated = 0;  // reports with preconditions met
  long skipped = 0;    // reports with unmet preconditions
  long violations = 0;
  long equalities = 0;
  long mismatches = 0;  // equality disagreed with the stated characterization
  long float_decisions = 0;
  long rechecks = 0;
  /// graph6 strings (or lemma inputs) of the first few violations/mismatches.
  std::vector<std::string> witnesses;
};

struct SweepSummary {
  long exhaustive_graphs = 0;
  long random_graphs = 0;
  std::vector<TheoremTally> tallies;  // sorted by id

  long total_violations() const;
  long total_mismatches() const;
  bool clean() const { return total_violations() == 0 && total_mismatches() == 0; }
};

/// Runs the campaign. Graphs are checked in parallel; the summary depends
/// only on the configuration, never on scheduling.
SweepSummary run_sweep(const SweepConfig& config);

/// Uniform integer in [lo, hi], independent of the standard library's
/// distribution implementations so that seeds reproduce across platforms.
int uniform_int(std::mt19937_64& rng, int lo, int hi);
double uniform_unit(std::mt19937_64& rng);

/// A connected graph on uniform n in [n_min, n_max]: a random recursive tree
/// plus every other pair independently with a probability p drawn uniformly
/// from [0, 1).
Graph random_connected_graph(std::mt19937_64& rng, int n_min, int n_max);

}  // namespace gaindex
