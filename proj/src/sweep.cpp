#include "gaindex/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "gaindex/checks.hpp"
#include "gaindex/enumeration.hpp"
#include "gaindex/errors.hpp"
#include "gaindex/graph_io.hpp"

namespace gaindex {
namespace {

constexpr std::size_t kMaxWitnesses = 5;

struct Outcome {
  std::string id;
  bool met = false;
  bool violated = false;
  bool equality = false;
  bool mismatch = false;
  bool float_mode = false;
  bool recheck = false;
};

struct Job {
  Graph graph;
  std::string label;
  // Lemma inputs drawn for this job, if any.
  long lemma3_delta = 0;
  double lemma3_t = -1;
  std::vector<double> lemma8_xs;
};

std::string format_alpha(double alpha) {
  std::ostringstream out;
  out << alpha;
  return out.str();
}

void record(std::vector<Outcome>& outcomes, const CheckReport& r) {
  Outcome o;
  o.id = r.alpha ? r.theorem_id + "@" + format_alpha(*r.alpha) : r.theorem_id;
  o.met = r.preconditions_met;
  o.violated = r.violated();
  o.equality = r.preconditions_met && r.equality;
  o.mismatch = r.mismatch();
  o.float_mode = r.mode != DecisionMode::kExact;
  o.recheck = r.mode == DecisionMode::kFloatRechecked;
  outcomes.push_back(std::move(o));
}

std::vector<Outcome> evaluate(const Job& job, const SweepConfig& config) {
  std::vector<Outcome> outcomes;
  for (const CheckReport& r : run_checks(job.graph, config.theorems, config.alphas)) {
    record(outcomes, r);
  }
  if (job.lemma3_t >= 0) {
    CheckReport r = check_lemma_line3(job.lemma3_delta, job.lemma3_t);
    r.theorem_id = "lemma_line3.real";
    record(outcomes, r);
  }
  if (!job.lemma8_xs.empty()) {
    CheckReport r = check_lemma_line8(std::span<const double>(job.lemma8_xs));
    r.theorem_id = "lemma_line8.real";
    record(outcomes, r);
  }
  return outcomes;
}

std::string lemma_label(const Job& job) {
  std::ostringstream out;
  out.precision(17);
  out << job.label << " [lemma3 delta=" << job.lemma3_delta << " t=" << job.lemma3_t
      << "; lemma8 xs=";
  for (std::size_t i = 0; i < job.lemma8_xs.size(); ++i) {
    out << (i ? "," : "") << job.lemma8_xs[i];
  }
  out << "]";
  return out.str();
}

}  // namespace

long SweepSummary::total_violations() const {
  long total = 0;
  for (const TheoremTally& t : tallies) total += t.violations;
  return total;
}

long SweepSummary::total_mismatches() const {
  long total = 0;
  for (const TheoremTally& t : tallies) total += t.mismatches;
  return total;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % range);
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph random_connected_graph(std::mt19937_64& rng, int n_min, int n_max) {
  const int n = uniform_int(rng, n_min, n_max);
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(uniform_int(rng, 0, v - 1), v);
  const double p = uniform_unit(rng);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (uniform_unit(rng) < p) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

SweepSummary run_sweep(const SweepConfig& config) {
  if (config.exhaustive_nmax > kDefaultEnumerationLimit) {
    throw LimitError("sweep: exhaustive n_max " + std::to_string(config.exhaustive_nmax) +
                     " exceeds the limit " + std::to_string(kDefaultEnumerationLimit) +
                     "; use random trials for larger graphs");
  }
  if (config.random_trials > 0 &&
      (config.random_nmin < 2 || config.random_nmax < config.random_nmin)) {
    throw std::invalid_argument("sweep: random orders need 2 <= nmin <= nmax");
  }
  // Validates the theorem ids before any work starts.
  run_checks(path_graph(3), config.theorems, config.alphas);

  SweepSummary summary;
  std::vector<Job> jobs;
  for (int n = 1; n <= config.exhaustive_nmax; ++n) {
    for (Graph& g : enumerate_connected(n)) {
      Job job;
      job.graph = g;
      job.label = to_graph6(g);
      jobs.push_back(std::move(job));
      ++summary.exhaustive_graphs;
    }
  }
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.random_trials; ++i) {
    Job job;
    job.graph = random_connected_graph(rng, config.random_nmin, config.random_nmax);
    job.label = to_graph6(job.graph);
    if (config.random_lemmas) {
      job.lemma3_delta = uniform_int(rng, 1, 12);
      job.lemma3_t = 20 * uniform_unit(rng);
      if (job.lemma3_delta == 1 && job.lemma3_t == 0) job.lemma3_t = 1;
      const int k = uniform_int(rng, 1, 6);
      for (int j = 0; j < k; ++j) job.lemma8_xs.push_back(2 + 48 * uniform_unit(rng));
    }
    jobs.push_back(std::move(job));
    ++summary.random_graphs;
  }

  std::vector<std::vector<Outcome>> results(jobs.size());
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
          results[i] = evaluate(jobs[i], config);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::map<std::string, TheoremTally> tallies;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    for (const Outcome& o : results[i]) {
      TheoremTally& tally = tallies[o.id];
      tally.id = o.id;
      if (!o.met) {
        ++tally.skipped;
        continue;
      }
      ++tally.evaluated;
      tally.violations += o.violated;
      tally.equalities += o.equality;
      tally.mismatches += o.mismatch;
      tally.float_decisions += o.float_mode;
      tally.rechecks += o.recheck;
      if ((o.violated || o.mismatch) && tally.witnesses.size() < kMaxWitnesses) {
        const bool lemma = o.id.find(".real") != std::string::npos;
        tally.witnesses.push_back(lemma ? lemma_label(jobs[i]) : jobs[i].label);
      }
    }
  }
  for (auto& [id, tally] : tallies) summary.tallies.push_back(std::move(tally));
  return summary;
}

}  // namespace gaindex
