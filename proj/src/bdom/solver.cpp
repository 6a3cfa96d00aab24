#include "bdom/solver.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <utility>

#include "bdom/error.hpp"

namespace bdom {

namespace {

// Per-thread candidate evaluation scratch. Token stamping avoids clearing
// the buffers between the (many) candidates a worker visits.
class Evaluator {
 public:
  explicit Evaluator(const Graph& g)
      : graph_(&g),
        n_(g.vertex_count()),
        bfs_stamp_(static_cast<std::size_t>(n_), 0),
        covered_stamp_(static_cast<std::size_t>(n_), 0) {
    queue_.reserve(static_cast<std::size_t>(n_));
  }

  // True when the assignment {support[i] -> strengths[i]} dominates the
  // graph; with require_efficient, additionally no vertex may hear two
  // broadcast vertices.
  bool dominates(const std::vector<int>& support,
                 const std::vector<int>& strengths, bool require_efficient) {
    ++candidate_token_;
    int covered = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const int source = support[i];
      const int reach = strengths[i];
      ++bfs_token_;
      queue_.clear();
      queue_.emplace_back(source, 0);
      bfs_stamp_[static_cast<std::size_t>(source)] = bfs_token_;
      for (std::size_t head = 0; head < queue_.size(); ++head) {
        const auto [u, du] = queue_[head];
        auto& cov = covered_stamp_[static_cast<std::size_t>(u)];
        if (cov != candidate_token_) {
          cov = candidate_token_;
          ++covered;
        } else if (require_efficient) {
          return false;  // second broadcast vertex reaching u
        }
        if (du == reach) continue;
        for (int w : graph_->neighbors(u)) {
          auto& stamp = bfs_stamp_[static_cast<std::size_t>(w)];
          if (stamp != bfs_token_) {
            stamp = bfs_token_;
            queue_.emplace_back(w, du + 1);
          }
        }
      }
    }
    return covered == n_;
  }

 private:
  const Graph* graph_;
  int n_;
  std::vector<long long> bfs_stamp_;
  std::vector<long long> covered_stamp_;
  long long bfs_token_ = 0;
  long long candidate_token_ = 0;
  std::vector<std::pair<int, int>> queue_;  // (vertex, depth)
};

using Witness = std::vector<BroadcastEntry>;

struct WorkerOutcome {
  std::optional<Witness> best;
  std::uint64_t checked = 0;
};

// Enumerates every strength vector for `support` with per-vertex bounds
// 1..cap and total exactly `cost`, evaluating each. Keeps the canonical
// (lexicographically smallest) dominating one.
void search_support(const std::vector<int>& support,
                    const std::vector<int>& caps, int cost,
                    bool require_efficient, Evaluator& eval,
                    WorkerOutcome& out) {
  const std::size_t k = support.size();
  std::vector<int> strengths(k, 0);
  std::vector<int> cap_suffix(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) {
    cap_suffix[i] = cap_suffix[i + 1] + caps[i];
  }
  if (cap_suffix[0] < cost) return;  // support cannot spend the budget

  auto consider = [&] {
    ++out.checked;
    if (!eval.dominates(support, strengths, require_efficient)) return;
    Witness w(k);
    for (std::size_t i = 0; i < k; ++i) {
      w[i] = BroadcastEntry{support[i], strengths[i]};
    }
    if (!out.best || w < *out.best) out.best = std::move(w);
  };

  // Depth-first over positions; remaining budget must stay within what the
  // unfilled suffix can absorb (1..cap each).
  auto descend = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == k) {
      if (remaining >= 1 && remaining <= caps[i]) {
        strengths[i] = remaining;
        consider();
      }
      return;
    }
    const int slots_after = static_cast<int>(k - i - 1);
    const int lo = std::max(1, remaining - cap_suffix[i + 1]);
    const int hi = std::min(caps[i], remaining - slots_after);
    for (int s = lo; s <= hi; ++s) {
      strengths[i] = s;
      self(self, i + 1, remaining - s);
    }
  };
  descend(descend, 0, cost);
}

// All size-k vertex subsets in lexicographic order, flattened (k per entry).
std::vector<int> all_supports(int n, int k) {
  std::vector<int> flat;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    flat.insert(flat.end(), pick.begin(), pick.end());
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return flat;
}

// One (cost, support-size) batch. Every candidate in the batch is evaluated
// regardless of hits, so candidates_checked does not depend on scheduling.
WorkerOutcome search_level(const Graph& g, const std::vector<int>& strength_cap,
                           int cost, int k, bool require_efficient,
                           int threads) {
  const auto flat = all_supports(g.vertex_count(), k);
  const std::size_t count = flat.size() / static_cast<std::size_t>(k);

  auto run_range = [&](std::size_t first, std::size_t stride,
                       WorkerOutcome& out) {
    Evaluator eval(g);
    std::vector<int> support(static_cast<std::size_t>(k));
    std::vector<int> caps(static_cast<std::size_t>(k));
    for (std::size_t idx = first; idx < count; idx += stride) {
      const int* base = flat.data() + idx * static_cast<std::size_t>(k);
      for (int i = 0; i < k; ++i) {
        support[static_cast<std::size_t>(i)] = base[i];
        caps[static_cast<std::size_t>(i)] =
            strength_cap[static_cast<std::size_t>(base[i])];
      }
      search_support(support, caps, cost, require_efficient, eval, out);
    }
  };

  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    WorkerOutcome out;
    run_range(0, 1, out);
    return out;
  }

  std::vector<WorkerOutcome> outcomes(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      run_range(static_cast<std::size_t>(t), static_cast<std::size_t>(workers),
                outcomes[static_cast<std::size_t>(t)]);
    });
  }
  for (auto& th : pool) th.join();

  WorkerOutcome merged;
  for (auto& o : outcomes) {
    merged.checked += o.checked;
    if (o.best && (!merged.best || *o.best < *merged.best)) {
      merged.best = std::move(o.best);
    }
  }
  return merged;
}

}  // namespace

SolveResult solve_exact(const Graph& g, const SolveOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  if (opts.max_cost && *opts.max_cost < 1) {
    std::ostringstream msg;
    msg << "max_cost must be >= 1 (got " << *opts.max_cost << ")";
    raise(ErrorCode::InvalidArgument, msg.str());
  }

  const auto profile = metrics(g);  // rejects disconnected graphs
  // A center vertex at strength radius dominates, so max(1, radius) always
  // bounds the optimum; the max(1, ...) keeps the single-vertex graph, whose
  // radius is 0 but which still needs one strength-1 broadcast, solvable.
  const int budget = opts.max_cost ? *opts.max_cost
                                   : std::max(1, profile.radius);

  std::vector<int> strength_cap(profile.eccentricity.size());
  const int n = g.vertex_count();

  std::uint64_t checked = 0;
  for (int cost = 1; cost <= budget; ++cost) {
    for (std::size_t v = 0; v < strength_cap.size(); ++v) {
      strength_cap[v] = std::min(cost, std::max(1, profile.eccentricity[v]));
    }
    for (int k = 1; k <= std::min(cost, n); ++k) {
      auto outcome = search_level(g, strength_cap, cost, k,
                                  opts.require_efficient, opts.threads);
      checked += outcome.checked;
      if (outcome.best) {
        SolveResult result;
        result.gamma_b = cost;
        result.witness = BroadcastAssignment::from_entries(*outcome.best);
        result.candidates_checked = checked;
        result.elapsed = std::chrono::steady_clock::now() - started;
        return result;
      }
    }
  }

  std::ostringstream msg;
  msg << "no dominating broadcast assignment within cost bound " << budget;
  raise(ErrorCode::BudgetExhausted, msg.str());
}

SolveResult solve_exact_efficient(const Graph& g) {
  SolveOptions opts;
  opts.require_efficient = true;
  return solve_exact(g, opts);
}

}  // namespace bdom
