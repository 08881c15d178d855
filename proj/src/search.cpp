#include "mixgeo/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "mixgeo/analysis.hpp"
#include "mixgeo/bounds.hpp"
#include "search_engine.hpp"

namespace mixgeo {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Found: return "FOUND";
    case Verdict::ExhaustedNone: return "EXHAUSTED_NONE";
    case Verdict::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

namespace detail {

GeodeticState::GeodeticState(int n, int k)
    : n_(n),
      k_(k),
      dist_(static_cast<std::size_t>(n) * n, kNone),
      rel_(static_cast<std::size_t>(n) * n, kNoRel),
      deg_e_(n, 0),
      deg_a_(n, 0),
      incid_(n, 0),
      stamp_(static_cast<std::size_t>(n) * n, 0) {
  if (k < 1 || k > 200) throw Error(ErrorKind::InvalidParam, "search needs 1 <= k <= 200");
  for (int s = 0; s < n; ++s) dist_[s * n + s] = 0;
}

bool GeodeticState::collect(int a, int b, bool second_dart) {
  for (int s = 0; s < n_; ++s) {
    const int i = dist_[s * n_ + a];
    if (i > k_ - 1) continue;
    const int budget = k_ - 1 - i;
    const std::uint8_t* row_b = &dist_[b * n_];
    for (int t = 0; t < n_; ++t) {
      const int j = row_b[t];
      if (j > budget) continue;
      if (t == s) return false;
      const int idx = s * n_ + t;
      if (dist_[idx] != kNone) return false;
      if (second_dart && stamp_[idx] == epoch_) return false;
      stamp_[idx] = epoch_;
      pending_.push_back({s, t, static_cast<std::uint8_t>(i + 1 + j)});
    }
  }
  return true;
}

bool GeodeticState::add_arc(int a, int b) {
  if (a == b || rel_[a * n_ + b] != kNoRel) return false;
  pending_.clear();
  ++epoch_;
  if (!collect(a, b, false)) return false;
  log_.push_back({a, b, false, changed_.size()});
  for (const auto& p : pending_) {
    dist_[p.s * n_ + p.t] = p.len;
    changed_.push_back(p.s * n_ + p.t);
  }
  rel_[a * n_ + b] = kArcOut;
  rel_[b * n_ + a] = kArcIn;
  ++deg_a_[a];
  ++incid_[a];
  ++incid_[b];
  return true;
}

bool GeodeticState::add_edge(int a, int b) {
  if (a == b || rel_[a * n_ + b] != kNoRel) return false;
  pending_.clear();
  ++epoch_;
  if (!collect(a, b, false) || !collect(b, a, true)) return false;
  log_.push_back({a, b, true, changed_.size()});
  for (const auto& p : pending_) {
    dist_[p.s * n_ + p.t] = p.len;
    changed_.push_back(p.s * n_ + p.t);
  }
  rel_[a * n_ + b] = kEdge;
  rel_[b * n_ + a] = kEdge;
  ++deg_e_[a];
  ++deg_e_[b];
  ++incid_[a];
  ++incid_[b];
  return true;
}

void GeodeticState::undo() {
  const LogEntry e = log_.back();
  log_.pop_back();
  for (std::size_t i = e.dist_mark; i < changed_.size(); ++i) dist_[changed_[i]] = kNone;
  changed_.resize(e.dist_mark);
  rel_[e.a * n_ + e.b] = kNoRel;
  rel_[e.b * n_ + e.a] = kNoRel;
  if (e.edge) {
    --deg_e_[e.a];
    --deg_e_[e.b];
  } else {
    --deg_a_[e.a];
  }
  --incid_[e.a];
  --incid_[e.b];
}

MixedGraph GeodeticState::graph() const {
  std::vector<VertexPair> edges, arcs;
  for (const auto& e : log_) (e.edge ? edges : arcs).emplace_back(e.a, e.b);
  return build_graph(n_, edges, arcs);
}

}  // namespace detail

namespace {

using detail::GeodeticState;

/// The rooted Moore tree laid out breadth first, edge children first.
struct Seed {
  std::vector<VertexPair> edges, arcs;
  int size = 0;
  /// Symmetry class of leaves and outliers; -1 for interior vertices.
  std::vector<int> cls;
};

Seed moore_seed(int r, int z, int k, int n) {
  struct Node {
    int parent, depth;
    bool via_edge;
  };
  std::vector<Node> nodes{{-1, 0, false}};
  Seed seed;
  for (std::size_t h = 0; h < nodes.size(); ++h) {
    const Node cur = nodes[h];
    if (cur.depth == k) continue;
    const int edge_children = (h == 0 || !cur.via_edge) ? r : r - 1;
    for (int i = 0; i < edge_children; ++i) {
      seed.edges.emplace_back(static_cast<int>(h), static_cast<int>(nodes.size()));
      nodes.push_back({static_cast<int>(h), cur.depth + 1, true});
    }
    for (int i = 0; i < z; ++i) {
      seed.arcs.emplace_back(static_cast<int>(h), static_cast<int>(nodes.size()));
      nodes.push_back({static_cast<int>(h), cur.depth + 1, false});
    }
    if (static_cast<int>(nodes.size()) > n) break;
  }
  seed.size = static_cast<int>(nodes.size());
  seed.cls.assign(std::max(n, seed.size), -1);
  const int outlier_class = 2 * seed.size;
  for (int v = 0; v < n; ++v) {
    if (v >= seed.size)
      seed.cls[v] = outlier_class;
    else if (nodes[v].depth == k)
      seed.cls[v] = 2 * nodes[v].parent + (nodes[v].via_edge ? 1 : 0);
  }
  return seed;
}

struct SharedControl {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<long long> stop_after{-1};  ///< -1: no cut-off yet
};

class Dfs {
 public:
  Dfs(int r, int z, int k, int n, const SearchConfig& cfg, const Seed& seed, SharedControl& ctl)
      : st_(n, k), n_(n), seed_(seed), ctl_(ctl), exact_(cfg.mode == DegreeMode::Exact) {
    lo_e_ = r;
    lo_a_ = z;
    hi_e_ = exact_ ? r : r + cfg.slack;
    hi_a_ = exact_ ? z : z + cfg.slack;
    for (auto [a, b] : seed.edges)
      if (!st_.add_edge(a, b)) throw Error(ErrorKind::PreconditionFailed, "Moore tree seed is not geodetic");
    for (auto [a, b] : seed.arcs)
      if (!st_.add_arc(a, b)) throw Error(ErrorKind::PreconditionFailed, "Moore tree seed is not geodetic");
    for (int v = 0; v < n; ++v) base_incid_.push_back(st_.incidence(v));
  }

  /// Collects decision paths of length `depth` (or shorter complete ones).
  std::vector<std::vector<int>> record(int depth) {
    record_depth_ = depth;
    mode_ = Mode::Record;
    step(0, Phase::Edge, -1, 0);
    return std::move(records_);
  }

  /// Runs the subtree below `prefix`, keeping at most `limit` witnesses.
  std::vector<MixedGraph> replay(const std::vector<int>& prefix, std::size_t limit, long long index) {
    prefix_ = &prefix;
    mode_ = Mode::Replay;
    limit_ = limit;
    index_ = index;
    witnesses_.clear();
    stop_ = false;
    step(0, Phase::Edge, -1, 0);
    return std::move(witnesses_);
  }

  bool aborted() const { return aborted_; }

 private:
  enum class Phase { Edge, Arc };
  enum class Mode { Record, Replay };

  bool pristine(int t, int v) const { return t > v && st_.incidence(t) == base_incid_[t]; }

  bool should_stop() {
    if (stop_) return true;
    const auto count = ctl_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (ctl_.budget && count > ctl_.budget) {
      ctl_.budget_hit = true;
      aborted_ = stop_ = true;
    } else if (ctl_.budget_hit) {
      aborted_ = stop_ = true;
    } else if (mode_ == Mode::Replay) {
      const long long cut = ctl_.stop_after.load(std::memory_order_relaxed);
      if (cut >= 0 && index_ > cut) aborted_ = stop_ = true;
    }
    return stop_;
  }

  bool complete(int v) const {
    return st_.undirected_degree(v) == hi_e_ && st_.out_degree(v) == hi_a_;
  }

  /// Candidate list for the current node, in increasing vertex order.
  void candidates(int v, Phase phase, int last, std::vector<int>& out) const {
    out.clear();
    std::vector<int> seen_class;
    if (phase == Phase::Edge) {
      if (st_.undirected_degree(v) >= hi_e_) return;
      for (int w = std::max(v, last) + 1; w < n_; ++w) {
        if (st_.undirected_degree(w) >= hi_e_ || st_.rel(v, w) != GeodeticState::kNoRel) continue;
        if (skip_symmetric(w, v, seen_class)) continue;
        out.push_back(w);
      }
    } else {
      if (st_.out_degree(v) >= hi_a_) return;
      for (int t = last + 1; t < n_; ++t) {
        if (t == v || st_.rel(v, t) != GeodeticState::kNoRel) continue;
        if (skip_symmetric(t, v, seen_class)) continue;
        out.push_back(t);
      }
    }
  }

  /// Among pristine vertices of one class only the first is tried.
  bool skip_symmetric(int t, int v, std::vector<int>& seen_class) const {
    const int c = seed_.cls[t];
    if (c < 0 || !pristine(t, v)) return false;
    if (std::find(seen_class.begin(), seen_class.end(), c) != seen_class.end()) return true;
    seen_class.push_back(c);
    return false;
  }

  void step(int v, Phase phase, int last, int depth) {
    if (should_stop()) return;
    if (exact_ && phase == Phase::Edge)
      while (v < n_ && complete(v)) ++v;
    if (v == n_) {
      if (mode_ == Mode::Record) {
        records_.push_back(path_);
        return;
      }
      witnesses_.push_back(st_.graph());
      if (limit_ && witnesses_.size() >= limit_) stop_ = true;
      return;
    }
    if (mode_ == Mode::Record && depth == record_depth_) {
      records_.push_back(path_);
      return;
    }

    const bool finish_ok =
        phase == Phase::Edge ? st_.undirected_degree(v) >= lo_e_ : st_.out_degree(v) >= lo_a_;
    std::vector<int> cand;
    candidates(v, phase, last, cand);
    // Option 0 finishes the phase (when allowed); option i >= 1 adds cand[i-1].
    const bool replaying = mode_ == Mode::Replay && depth < static_cast<int>(prefix_->size());
    const int forced = replaying ? (*prefix_)[depth] : -1;

    auto take = [&](int option) {
      path_.push_back(option);
      if (option == 0) {
        if (phase == Phase::Edge)
          step(v, Phase::Arc, -1, depth + 1);
        else
          step(v + 1, Phase::Edge, -1, depth + 1);
      } else {
        const int w = cand[option - 1];
        const bool ok = phase == Phase::Edge ? st_.add_edge(v, w) : st_.add_arc(v, w);
        if (ok) {
          step(v, phase, w, depth + 1);
          st_.undo();
        }
      }
      path_.pop_back();
    };

    if (finish_ok && (forced < 0 || forced == 0)) take(0);
    for (int i = 1; i <= static_cast<int>(cand.size()) && !stop_; ++i)
      if (forced < 0 || forced == i) take(i);
  }

  GeodeticState st_;
  int n_;
  const Seed& seed_;
  SharedControl& ctl_;
  bool exact_;
  int lo_e_ = 0, lo_a_ = 0, hi_e_ = 0, hi_a_ = 0;
  std::vector<int> base_incid_;
  Mode mode_ = Mode::Replay;
  int record_depth_ = 0;
  const std::vector<int>* prefix_ = nullptr;
  std::vector<int> path_;
  std::vector<std::vector<int>> records_;
  std::vector<MixedGraph> witnesses_;
  std::size_t limit_ = 0;
  long long index_ = 0;
  bool stop_ = false;
  bool aborted_ = false;
};

bool degrees_ok(const MixedGraph& g, int r, int z, const SearchConfig& cfg) {
  const auto p = degree_profile(g);
  const int se = cfg.mode == DegreeMode::Exact ? 0 : cfg.slack;
  return p.min_undirected >= r && p.max_undirected <= r + se && p.min_out >= z && p.max_out <= z + se;
}

}  // namespace

SearchOutcome search_exact(int r, int z, int k, int n, const SearchConfig& cfg) {
  if (r < 0 || z < 0 || r + z < 1 || k < 1 || n < 1)
    throw Error(ErrorKind::InvalidParam, "search needs r, z >= 0, r + z >= 1, k >= 1, n >= 1");
  if (cfg.threads < 1 || cfg.partition_depth < 0 || cfg.slack < 0)
    throw Error(ErrorKind::InvalidParam, "invalid search configuration");
  const auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out;
  auto finish = [&]() {
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  };

  if (static_cast<std::uint64_t>(n) < moore_mixed(r, z, k)) {
    out.note = "order below the Moore bound";
    return finish();
  }
  if (cfg.mode == DegreeMode::Exact && (static_cast<long long>(n) * r) % 2 != 0) {
    out.note = "n * r is odd";
    return finish();
  }

  const Seed seed = moore_seed(r, z, k, n);
  SharedControl ctl;
  ctl.budget = cfg.node_budget;

  std::vector<std::vector<int>> prefixes;
  {
    Dfs recorder(r, z, k, n, cfg, seed, ctl);
    prefixes = recorder.record(cfg.partition_depth);
  }

  struct Slot {
    bool done = false;
    std::vector<MixedGraph> witnesses;
  };
  std::vector<Slot> slots(prefixes.size());
  std::mutex mu;
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    Dfs dfs(r, z, k, n, cfg, seed, ctl);
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      const long long cut = ctl.stop_after.load();
      if (cut >= 0 && static_cast<long long>(i) > cut) continue;
      if (ctl.budget_hit) return;
      auto found = dfs.replay(prefixes[i], cfg.witness_limit, static_cast<long long>(i));
      if (dfs.aborted()) continue;
      std::lock_guard<std::mutex> lock(mu);
      slots[i].done = true;
      slots[i].witnesses = std::move(found);
      if (cfg.witness_limit) {
        std::size_t total = 0;
        for (std::size_t j = 0; j < slots.size() && slots[j].done; ++j) {
          total += slots[j].witnesses.size();
          if (total >= cfg.witness_limit) {
            const long long cur = ctl.stop_after.load();
            if (cur < 0 || static_cast<long long>(j) < cur) ctl.stop_after = static_cast<long long>(j);
            break;
          }
        }
      }
    }
  };

  const int nthreads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(prefixes.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const long long cut = ctl.stop_after.load();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (cut >= 0 && static_cast<long long>(i) > cut) break;
    for (auto& w : slots[i].witnesses) {
      if (cfg.witness_limit && out.witnesses.size() >= cfg.witness_limit) break;
      out.witnesses.push_back(std::move(w));
    }
  }
  if (cfg.iso_filter && n <= 12) out.witnesses = iso_distinct(out.witnesses);
  for (const auto& w : out.witnesses)
    if (!degrees_ok(w, r, z, cfg) || !geodecity_report(w, k).is_k_geodetic)
      throw Error(ErrorKind::PreconditionFailed, "internal error: search produced an invalid witness");

  out.nodes = ctl.nodes.load();
  if (!out.witnesses.empty())
    out.verdict = Verdict::Found;
  else if (ctl.budget_hit)
    out.verdict = Verdict::BudgetExceeded;
  else
    out.verdict = Verdict::ExhaustedNone;
  return finish();
}

SmallestGeneralResult smallest_general(int r, int z, int k, const SearchConfig& cfg, int n_start, int n_end) {
  SmallestGeneralResult res;
  for (int n = n_start; n <= n_end; ++n) {
    SearchOutcome o = search_exact(r, z, k, n, cfg);
    res.per_order.push_back({n, o});
    if (o.verdict == Verdict::Found) {
      res.order = n;
      res.outcome = std::move(o);
      return res;
    }
    if (o.verdict == Verdict::BudgetExceeded) {
      res.outcome = std::move(o);
      return res;
    }
  }
  res.outcome.verdict = Verdict::ExhaustedNone;
  return res;
}

}  // namespace mixgeo
