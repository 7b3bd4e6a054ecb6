#include "irrdom/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "irrdom/errors.hpp"

namespace irrdom {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

double raw_assignment_count(std::size_t n, std::size_t k, Label universe) {
  if (k > n || k > std::size_t{universe} + 1) return 0.0;
  double choose = 1.0, arrange = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    choose = choose * static_cast<double>(n - i) / static_cast<double>(i + 1);
    arrange *= static_cast<double>(universe + 1 - i);
  }
  return choose * arrange;
}

namespace {

using Word = std::uint64_t;
using Clock = std::chrono::steady_clock;
constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();
constexpr std::int32_t kUnlabeled = -1;

// Immutable per-query data shared by all workers.
struct Problem {
  const Graph* graph = nullptr;
  std::size_t n = 0;
  std::size_t words = 0;
  Label universe = 0;
  std::size_t k = 0;
  bool exact = false;
  // Vertex 0 carries label 0. Sound on vertex-transitive graphs, and the
  // lexicographic minimum always has this form there.
  bool fix_root = false;
  std::vector<Word> cover;  // bitset of vertices dominated by (v, label)

  const Word* covered_by(Vertex v, Label l) const {
    return cover.data() + (std::size_t{v} * (universe + 1) + l) * words;
  }
};

Problem make_problem(const Graph& g, std::size_t k, Label universe, bool exact, bool fix_root) {
  Problem p;
  p.graph = &g;
  p.n = g.order();
  p.words = (p.n + 63) / 64;
  p.universe = universe;
  p.k = k;
  p.exact = exact;
  p.fix_root = fix_root;
  p.cover.assign(p.n * (std::size_t{universe} + 1) * p.words, 0);
  for (Vertex v = 0; v < p.n; ++v) {
    auto row = g.distances().row(v);
    for (Vertex u = 0; u < p.n; ++u) {
      if (row[u] <= universe) {
        Word* bits = p.cover.data() + (std::size_t{v} * (universe + 1) + row[u]) * p.words;
        bits[u / 64] |= Word{1} << (u % 64);
      }
    }
  }
  return p;
}

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> timed_out{false};
  std::atomic<std::size_t> best_task{kNoTask};
  std::optional<Clock::time_point> deadline;
  bool deterministic = true;
};

using Prefix = std::vector<std::int32_t>;

// Depth-first search over vertices in index order; at each vertex the options
// are the unused labels in increasing order, then "unlabeled". This order
// visits solutions in increasing lexicographic order of their sorted
// (vertex, label) pairs.
class Searcher {
 public:
  // Return true from the callback to stop the search.
  using SolutionFn = std::function<bool(const Searcher&)>;

  Searcher(const Problem& p, Shared& shared)
      : p_(p),
        shared_(shared),
        label_of_(p.n, kUnlabeled),
        uncovered_(p.words, 0),
        saved_((p.n + 1) * p.words, 0),
        coverable_(p.words, 0),
        used_(std::size_t{p.universe} + 1, 0),
        caps_(std::size_t{p.universe} + 1, 0) {}

  void reset() {
    std::fill(label_of_.begin(), label_of_.end(), kUnlabeled);
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(uncovered_.begin(), uncovered_.end(), 0);
    for (std::size_t u = 0; u < p_.n; ++u) uncovered_[u / 64] |= Word{1} << (u % 64);
    labeled_ = 0;
    unused_ = std::size_t{p_.universe} + 1;
  }

  // Applies a prefix produced by collect_frontier; returns the next vertex.
  Vertex replay(const Prefix& prefix) {
    reset();
    for (Vertex v = 0; v < prefix.size(); ++v)
      if (prefix[v] != kUnlabeled) apply(v, static_cast<Label>(prefix[v]));
    return static_cast<Vertex>(prefix.size());
  }

  // Returns true iff stopped by the callback.
  bool run(Vertex start, std::size_t task, SolutionFn on_solution) {
    task_ = task;
    on_solution_ = std::move(on_solution);
    frontier_ = nullptr;
    bool stopped = dfs(start);
    flush();
    return stopped;
  }

  void collect_frontier(std::size_t depth, std::vector<Prefix>& out) {
    reset();
    task_ = 0;
    frontier_ = &out;
    frontier_depth_ = depth;
    dfs(0);
    flush();
    frontier_ = nullptr;
  }

  Labeling labeling(std::shared_ptr<const Graph> g) const {
    std::vector<std::optional<Label>> labels(p_.n);
    for (std::size_t v = 0; v < p_.n; ++v)
      if (label_of_[v] != kUnlabeled) labels[v] = static_cast<Label>(label_of_[v]);
    return Labeling(std::move(g), std::move(labels), LabelMode::extended);
  }

 private:
  bool uncovered_empty() const {
    return std::all_of(uncovered_.begin(), uncovered_.end(), [](Word w) { return w == 0; });
  }

  void apply(Vertex v, Label l) {
    std::copy_n(uncovered_.begin(), p_.words, saved_.begin() + std::size_t{v} * p_.words);
    const Word* c = p_.covered_by(v, l);
    for (std::size_t w = 0; w < p_.words; ++w) uncovered_[w] &= ~c[w];
    label_of_[v] = static_cast<std::int32_t>(l);
    used_[l] = 1;
    --unused_;
    ++labeled_;
  }

  void undo(Vertex v) {
    std::copy_n(saved_.begin() + std::size_t{v} * p_.words, p_.words, uncovered_.begin());
    used_[static_cast<std::size_t>(label_of_[v])] = 0;
    label_of_[v] = kUnlabeled;
    ++unused_;
    --labeled_;
  }

  bool fits_exactly(const Word* c) const {
    for (std::size_t w = 0; w < p_.words; ++w)
      if (c[w] & ~uncovered_[w]) return false;
    return true;
  }

  // Every uncovered vertex must still be reachable by some (undecided vertex,
  // unused label) option, and the best remaining labels must be able to cover
  // the uncovered count.
  bool feasible(Vertex i) {
    const std::size_t remaining = p_.k - labeled_;
    if (remaining > p_.n - i || remaining > unused_) return false;
    std::size_t open = 0;
    for (Word w : uncovered_) open += static_cast<std::size_t>(std::popcount(w));
    if (open == 0) return true;

    std::fill(coverable_.begin(), coverable_.end(), 0);
    for (Label l = 0; l <= p_.universe; ++l) {
      caps_[l] = 0;
      if (used_[l]) continue;
      std::size_t cap = 0;
      for (Vertex v = i; v < p_.n; ++v) {
        const Word* c = p_.covered_by(v, l);
        if (p_.exact && !fits_exactly(c)) continue;
        std::size_t gain = 0;
        for (std::size_t w = 0; w < p_.words; ++w) {
          Word x = c[w] & uncovered_[w];
          coverable_[w] |= x;
          gain += static_cast<std::size_t>(std::popcount(x));
        }
        cap = std::max(cap, gain);
      }
      caps_[l] = cap;
    }
    for (std::size_t w = 0; w < p_.words; ++w)
      if (uncovered_[w] & ~coverable_[w]) return false;

    std::size_t total = 0, slots = remaining;
    if (!used_[0]) {
      total += caps_[0];
      --slots;
    }
    top_.clear();
    for (Label l = 1; l <= p_.universe; ++l)
      if (!used_[l]) top_.push_back(caps_[l]);
    slots = std::min(slots, top_.size());
    std::partial_sort(top_.begin(), top_.begin() + static_cast<std::ptrdiff_t>(slots), top_.end(),
                      std::greater<>());
    for (std::size_t s = 0; s < slots; ++s) total += top_[s];
    return total >= open;
  }

  bool should_abort() const {
    if (shared_.timed_out.load(std::memory_order_relaxed)) return true;
    std::size_t best = shared_.best_task.load(std::memory_order_relaxed);
    if (best == kNoTask || frontier_) return false;
    return shared_.deterministic ? task_ > best : true;
  }

  void flush() {
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

  void tick() {
    if ((++local_nodes_ & 1023) != 0) return;
    flush();
    if (shared_.deadline && Clock::now() >= *shared_.deadline)
      shared_.timed_out.store(true, std::memory_order_relaxed);
  }

  bool dfs(Vertex i) {
    tick();
    if (should_abort()) return true;
    if (frontier_ && (i == frontier_depth_ || (labeled_ == p_.k && uncovered_empty()))) {
      frontier_->emplace_back(label_of_.begin(), label_of_.begin() + i);
      return false;
    }
    if (labeled_ == p_.k) return used_[0] && uncovered_empty() && on_solution_(*this);
    if (i == p_.n || !feasible(i)) return false;

    const bool root_fixed = p_.fix_root && i == 0;
    // The last free slot must take the 0 if it is still unused.
    const bool zero_only = root_fixed || (!used_[0] && labeled_ + 1 == p_.k);
    for (Label l = 0; l <= (zero_only ? 0 : p_.universe); ++l) {
      if (used_[l]) continue;
      if (p_.exact && !fits_exactly(p_.covered_by(i, l))) continue;
      apply(i, l);
      bool stop = dfs(i + 1);
      undo(i);
      if (stop) return true;
    }
    if (!root_fixed && p_.n - i - 1 >= p_.k - labeled_) return dfs(i + 1);
    return false;
  }

  const Problem& p_;
  Shared& shared_;
  std::vector<std::int32_t> label_of_;
  std::vector<Word> uncovered_;
  std::vector<Word> saved_;
  std::vector<Word> coverable_;
  std::vector<char> used_;
  std::vector<std::size_t> caps_;
  std::vector<std::size_t> top_;
  std::size_t labeled_ = 0;
  std::size_t unused_ = 0;
  std::uint64_t local_nodes_ = 0;
  std::size_t task_ = 0;
  SolutionFn on_solution_;
  std::vector<Prefix>* frontier_ = nullptr;
  std::size_t frontier_depth_ = 0;
};

Label effective_universe(const Graph& g, const SearchOptions& opts) {
  const Distance diam = g.diameter();
  return opts.label_universe ? std::min<Label>(*opts.label_universe, diam) : diam;
}

void check_query(const Graph& g, std::size_t k, const SearchOptions& opts) {
  if (!g.connected()) throw DisconnectedGraphError("search requires a connected graph");
  if (k == 0) throw ParameterError("k must be positive");
  if (k > g.order())
    throw ParameterError("k = " + std::to_string(k) + " exceeds the order " + std::to_string(g.order()));
  if (opts.parallel_width == 0) throw ParameterError("parallel_width must be at least 1");
}

SearchResult search(const std::shared_ptr<const Graph>& g, std::size_t k, const SearchOptions& opts,
                    std::optional<Clock::time_point> deadline) {
  const auto start = Clock::now();
  const Label universe = effective_universe(*g, opts);
  const bool exact = opts.require_exact_cover.value_or(g->vertex_transitive());
  Problem problem = make_problem(*g, k, universe, exact, g->vertex_transitive());

  Shared shared;
  shared.deadline = deadline;
  shared.deterministic = opts.deterministic;

  SearchResult result;
  auto finish = [&](SearchStatus status) {
    result.status = status;
    result.nodes_explored = shared.nodes.load();
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
  };

  if (k > std::size_t{universe} + 1) return finish(SearchStatus::absent);

  std::vector<Prefix> tasks;
  const unsigned width = opts.parallel_width;
  if (width == 1) {
    tasks.emplace_back();
  } else {
    Searcher splitter(problem, shared);
    for (std::size_t depth = 1; depth <= problem.n; ++depth) {
      tasks.clear();
      splitter.collect_frontier(depth, tasks);
      if (tasks.size() >= 8 * std::size_t{width} || shared.timed_out) break;
    }
  }

  std::vector<std::optional<Labeling>> solutions(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Searcher searcher(problem, shared);
    for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
      if (shared.timed_out) break;
      const std::size_t best = shared.best_task.load();
      if (best != kNoTask && (t > best || !opts.deterministic)) break;
      Vertex from = searcher.replay(tasks[t]);
      searcher.run(from, t, [&, t](const Searcher& s) {
        solutions[t] = s.labeling(g);
        std::size_t cur = shared.best_task.load();
        while (t < cur && !shared.best_task.compare_exchange_weak(cur, t)) {
        }
        return true;
      });
    }
  };
  if (width == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(width, tasks.size()); ++w) pool.emplace_back(worker);
  }

  const std::size_t best = shared.best_task.load();
  if (best != kNoTask) {
    result.labeling = std::move(solutions[best]);
    return finish(SearchStatus::found);
  }
  return finish(shared.timed_out ? SearchStatus::inconclusive : SearchStatus::absent);
}

std::optional<Clock::time_point> deadline_for(const SearchOptions& opts) {
  if (!opts.time_budget) return std::nullopt;
  return Clock::now() + *opts.time_budget;
}

}  // namespace

SearchResult find_eids(std::shared_ptr<const Graph> g, std::size_t k, const SearchOptions& opts) {
  if (!g) throw ParameterError("null graph");
  check_query(*g, k, opts);
  return search(g, k, opts, deadline_for(opts));
}

SearchResult find_eids(const Graph& g, std::size_t k, const SearchOptions& opts) {
  return find_eids(std::make_shared<const Graph>(g), k, opts);
}

GammaResult gamma_e(std::shared_ptr<const Graph> g, const SearchOptions& opts) {
  if (!g) throw ParameterError("null graph");
  check_query(*g, 1, opts);
  const auto start = Clock::now();
  const auto deadline = deadline_for(opts);
  const Label universe = effective_universe(*g, opts);
  const std::size_t top = std::min(g->order(), std::size_t{universe} + 1);

  GammaResult out;
  auto finish = [&](SearchStatus status) {
    out.status = status;
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return out;
  };
  for (std::size_t k = lower_bound(*g); k <= top; ++k) {
    SearchResult r = search(g, k, opts, deadline);
    out.nodes_explored += r.nodes_explored;
    if (r.status == SearchStatus::found) {
      out.gamma = k;
      out.witness = std::move(r.labeling);
      return finish(SearchStatus::found);
    }
    if (r.status == SearchStatus::inconclusive) return finish(SearchStatus::inconclusive);
    out.last_exhausted_k = k;
  }
  return finish(SearchStatus::absent);
}

GammaResult gamma_e(const Graph& g, const SearchOptions& opts) {
  return gamma_e(std::make_shared<const Graph>(g), opts);
}

std::vector<Labeling> enumerate_all(std::shared_ptr<const Graph> g, std::size_t k, const SearchOptions& opts) {
  if (!g) throw ParameterError("null graph");
  check_query(*g, k, opts);
  const Label universe = effective_universe(*g, opts);
  const double raw = raw_assignment_count(g->order(), k, universe);
  if (raw > opts.enumeration_cap)
    throw CapExceededError("enumeration of " + std::to_string(raw) +
                           " raw assignments exceeds the cap; use find_eids instead");
  std::vector<Labeling> out;
  if (k > std::size_t{universe} + 1) return out;

  Problem problem = make_problem(*g, k, universe, opts.require_exact_cover.value_or(false), false);
  Shared shared;
  Searcher searcher(problem, shared);
  searcher.reset();
  searcher.run(0, 0, [&](const Searcher& s) {
    out.push_back(s.labeling(g));
    return false;
  });
  return out;
}

std::vector<Labeling> enumerate_all(const Graph& g, std::size_t k, const SearchOptions& opts) {
  return enumerate_all(std::make_shared<const Graph>(g), k, opts);
}

}  // namespace irrdom
