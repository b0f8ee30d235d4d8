#include "ixc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <string>
#include <thread>
#include <utility>

#include "json_util.hpp"

namespace ixc {

namespace {

// V_demand must stay outside the span of the interference vectors.
struct Constraint {
  Msg demand;
  MsgSet interference;
  friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

std::vector<Constraint> collect_constraints(const Problem& p) {
  std::vector<Constraint> cs;
  for (size_t j = 0; j < p.receivers.size(); ++j)
    for (Msg k : p.receivers[j].demands)
      cs.push_back({k, interfering_set(p, static_cast<int>(j), k)});
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

void validate(int L, Field f) {
  if (L < 1 || L > 4) throw InvariantError("exhaustive search supports lengths 1..4");
  if (f.q != 2 && f.q != 3 && f.q != 5)
    throw InvariantError("exhaustive search supports GF(2), GF(3), and GF(5)");
}

/// Node counter shared by all workers of one search.
struct Budget {
  std::atomic<long long> used{0};
  long long cap;
  explicit Budget(long long c) : cap(c) {}
};

constexpr long long kFlushEvery = 4096;

class Engine {
 public:
  Engine(const Problem& p, int L, Field f, Budget* budget)
      : f_(f), L_(L), n_(p.n), budget_(budget) {
    cons_ = collect_constraints(p);
    demanded_.assign(static_cast<size_t>(n_), false);
    for (const Receiver& r : p.receivers)
      for (Msg k : r.demands) demanded_[static_cast<size_t>(k)] = true;
    as_demand_.resize(static_cast<size_t>(n_));
    in_interf_.resize(static_cast<size_t>(n_));
    for (size_t c = 0; c < cons_.size(); ++c) {
      as_demand_[static_cast<size_t>(cons_[c].demand)].push_back(static_cast<int>(c));
      for (Msg m : cons_[c].interference)
        in_interf_[static_cast<size_t>(m)].push_back(static_cast<int>(c));
    }

    int total = 1;
    for (int i = 0; i < L; ++i) total *= static_cast<int>(f.q);
    table_.reserve(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) {
      FVector v = FVector::zero(L);
      int x = i;
      for (int c = 0; c < L; ++c) {
        v.set(c, static_cast<uint32_t>(x) % f.q);
        x /= static_cast<int>(f.q);
      }
      table_.push_back(v);
    }

    assign_.assign(static_cast<size_t>(n_), std::nullopt);
    spans_.assign(cons_.size(), Subspace::zero(f, L));
  }

  /// Branching messages in most-constrained-first order, optionally forcing a
  /// prefix to come first (the subsets' union in classification mode).
  /// Messages nobody's interference mentions never branch: once everything
  /// else is placed they take their first workable vector independently.
  void plan_order(const MsgSet& prefix) {
    order_.clear();
    frees_.clear();
    auto load = [&](Msg m) {
      return as_demand_[static_cast<size_t>(m)].size() + in_interf_[static_cast<size_t>(m)].size();
    };
    auto by_load = [&](Msg a, Msg b) {
      size_t la = load(a), lb = load(b);
      return la != lb ? la > lb : a < b;
    };
    MsgSet pre = prefix;
    std::sort(pre.begin(), pre.end(), by_load);
    order_ = pre;
    MsgSet rest;
    for (Msg m = 0; m < n_; ++m) {
      if (set_contains(prefix, m)) continue;
      if (in_interf_[static_cast<size_t>(m)].empty())
        frees_.push_back(m);
      else
        rest.push_back(m);
    }
    std::sort(rest.begin(), rest.end(), by_load);
    order_.insert(order_.end(), rest.begin(), rest.end());
    u_size_ = prefix.size();
  }

  /// First-solution search over order_[depth..] plus the free tail. On
  /// success the full assignment is left in place for the caller to read.
  bool solve(size_t depth, bool projective_first) {
    if (depth == order_.size()) return fill_frees();
    Msg m = order_[depth];
    size_t start = demanded_[static_cast<size_t>(m)] ? 1 : 0;
    for (size_t idx = start; idx < table_.size(); ++idx) {
      const FVector& v = table_[idx];
      if (projective_first && depth == 0 && !canonical(v)) continue;
      node();
      size_t mark = trail_.size();
      if (place(m, v) && solve(depth + 1, projective_first)) return true;
      unwind(mark, m);
    }
    return false;
  }

  /// Enumerates the full vector space over the first u_size_ messages,
  /// invoking the callback at every consistent prefix. Depth-0 candidates are
  /// restricted to indices congruent to shard modulo stride, which is how
  /// workers split the tree.
  template <typename Fn>
  void for_each_prefix(size_t depth, size_t shard, size_t stride, Fn&& fn) {
    if (depth == u_size_) {
      fn();
      return;
    }
    Msg m = order_[depth];
    size_t start = demanded_[static_cast<size_t>(m)] ? 1 : 0;
    for (size_t idx = start; idx < table_.size(); ++idx) {
      if (depth == 0 && idx % stride != shard) continue;
      node();
      size_t mark = trail_.size();
      if (place(m, table_[idx])) {
        top_index_ = depth == 0 ? idx : top_index_;
        for_each_prefix(depth + 1, shard, stride, fn);
      }
      unwind(mark, m);
    }
  }

  /// Existence check for the current prefix; restores all state it touches.
  bool extend() {
    size_t mark = trail_.size();
    bool ok = solve(u_size_, false);
    if (ok && !witness_) {
      witness_ = snapshot();
      witness_top_ = top_index_;
    }
    while (trail_.size() > mark) {
      spans_[static_cast<size_t>(trail_.back().first)] = std::move(trail_.back().second);
      trail_.pop_back();
    }
    for (size_t d = u_size_; d < order_.size(); ++d) assign_[static_cast<size_t>(order_[d])].reset();
    clear_frees();
    return ok;
  }

  PrecodingAssignment snapshot() const {
    PrecodingAssignment code{L_, f_, {}};
    code.vectors.reserve(static_cast<size_t>(n_));
    for (Msg m = 0; m < n_; ++m) code.vectors.push_back(*assign_[static_cast<size_t>(m)]);
    return code;
  }

  int subset_dim(const MsgSet& s) const {
    std::vector<FVector> vs;
    vs.reserve(s.size());
    for (Msg m : s) vs.push_back(*assign_[static_cast<size_t>(m)]);
    return span_of(f_, L_, vs).dim();
  }

  void final_flush() {
    budget_->used.fetch_add(pending_, std::memory_order_relaxed);
    pending_ = 0;
  }

  std::optional<PrecodingAssignment> witness_;
  size_t witness_top_ = 0;  // depth-0 candidate index of the first witness

 private:
  bool canonical(const FVector& v) const {
    for (int i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      return v[i] == 1;
    }
    return true;  // the zero vector is its own class
  }

  bool place(Msg m, const FVector& v) {
    for (int ci : as_demand_[static_cast<size_t>(m)])
      if (spans_[static_cast<size_t>(ci)].contains(v)) return false;
    assign_[static_cast<size_t>(m)] = v;
    for (int ci : in_interf_[static_cast<size_t>(m)]) {
      trail_.emplace_back(ci, spans_[static_cast<size_t>(ci)]);
      spans_[static_cast<size_t>(ci)].extend(v);
      const auto& d = assign_[static_cast<size_t>(cons_[static_cast<size_t>(ci)].demand)];
      // Fail on a decoded demand landing in the span, or on the span filling
      // the whole space while the demand is still open; nothing escapes a
      // full span, so waiting to discover that at the leaf wastes the tree.
      if (d ? spans_[static_cast<size_t>(ci)].contains(*d)
            : spans_[static_cast<size_t>(ci)].dim() == L_)
        return false;
    }
    return true;
  }

  void unwind(size_t mark, Msg m) {
    while (trail_.size() > mark) {
      spans_[static_cast<size_t>(trail_.back().first)] = std::move(trail_.back().second);
      trail_.pop_back();
    }
    assign_[static_cast<size_t>(m)].reset();
  }

  bool fill_frees() {
    for (size_t i = 0; i < frees_.size(); ++i) {
      Msg m = frees_[i];
      bool found = false;
      size_t start = demanded_[static_cast<size_t>(m)] ? 1 : 0;
      for (size_t idx = start; idx < table_.size(); ++idx) {
        node();
        const FVector& v = table_[idx];
        bool ok = true;
        for (int ci : as_demand_[static_cast<size_t>(m)])
          if (spans_[static_cast<size_t>(ci)].contains(v)) {
            ok = false;
            break;
          }
        if (ok) {
          assign_[static_cast<size_t>(m)] = v;
          found = true;
          break;
        }
      }
      if (!found) {
        for (size_t k = 0; k < i; ++k) assign_[static_cast<size_t>(frees_[k])].reset();
        return false;
      }
    }
    return true;
  }

  void clear_frees() {
    for (Msg m : frees_) assign_[static_cast<size_t>(m)].reset();
  }

  void node() {
    ++pending_;
    if (budget_->used.load(std::memory_order_relaxed) + pending_ > budget_->cap) {
      final_flush();
      throw BudgetExceeded("search stopped at its node cap of " + std::to_string(budget_->cap) +
                           "; the outcome is unknown");
    }
    if (pending_ >= kFlushEvery) {
      budget_->used.fetch_add(pending_, std::memory_order_relaxed);
      pending_ = 0;
    }
  }

  Field f_;
  int L_;
  int n_;
  Budget* budget_;
  long long pending_ = 0;

  std::vector<Constraint> cons_;
  std::vector<bool> demanded_;
  std::vector<std::vector<int>> as_demand_, in_interf_;
  std::vector<FVector> table_;
  std::vector<Msg> order_, frees_;
  size_t u_size_ = 0;
  size_t top_index_ = 0;

  std::vector<std::optional<FVector>> assign_;
  std::vector<Subspace> spans_;
  std::vector<std::pair<int, Subspace>> trail_;
};

}  // namespace

OracleResult feasible_rate(const Problem& p, int L, const OracleOptions& opts) {
  validate(L, opts.field);
  Budget budget(opts.budget);
  Engine eng(p, L, opts.field, &budget);
  eng.plan_order({});
  OracleResult res;
  res.feasible = eng.solve(0, true);
  if (res.feasible) res.witness = eng.snapshot();
  eng.final_flush();
  res.nodes_explored = budget.used.load();
  return res;
}

OracleResult classify_subset_dims(const Problem& p, const std::vector<MsgSet>& subsets, int L,
                                  const OracleOptions& opts) {
  validate(L, opts.field);
  MsgSet u;
  for (const MsgSet& s : subsets) {
    if (s.empty()) throw EmptySubset("cannot classify an empty subset");
    for (Msg m : s) {
      if (m < 0 || m >= p.n)
        throw InvariantError("subset message " + std::to_string(m + 1) + " is out of range");
      u.push_back(m);
    }
  }
  u = make_set(std::move(u));

  Budget budget(opts.budget);
  size_t stride = static_cast<size_t>(std::max(1, opts.threads));

  struct Shard {
    std::unique_ptr<Engine> eng;
    std::map<MsgSet, std::set<int>> dims;
    bool feasible = false;
    std::exception_ptr error;
  };
  std::vector<Shard> shards(stride);
  for (auto& sh : shards) {
    sh.eng = std::make_unique<Engine>(p, L, opts.field, &budget);
    sh.eng->plan_order(u);
  }

  auto run = [&](size_t w) {
    Shard& sh = shards[w];
    try {
      sh.eng->for_each_prefix(0, w, stride, [&] {
        if (!sh.eng->extend()) return;
        sh.feasible = true;
        for (const MsgSet& s : subsets) sh.dims[s].insert(sh.eng->subset_dim(s));
      });
      sh.eng->final_flush();
    } catch (...) {
      sh.eng->final_flush();
      sh.error = std::current_exception();
    }
  };

  if (stride == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(stride);
    for (size_t w = 0; w < stride; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (const Shard& sh : shards)
    if (sh.error) std::rethrow_exception(sh.error);

  OracleResult res;
  res.nodes_explored = budget.used.load();
  res.achievable_dims.emplace();
  for (const MsgSet& s : subsets) (*res.achievable_dims)[s];
  const Shard* first = nullptr;
  for (const Shard& sh : shards) {
    res.feasible = res.feasible || sh.feasible;
    for (const auto& [s, ds] : sh.dims) (*res.achievable_dims)[s].insert(ds.begin(), ds.end());
    if (sh.eng->witness_ && (!first || sh.eng->witness_top_ < first->eng->witness_top_))
      first = &sh;
  }
  if (first) res.witness = first->eng->witness_;
  res.vacuous = !res.feasible;
  return res;
}

std::optional<int> minrank(const Problem& p, int max_l, const OracleOptions& opts) {
  for (int L = 1; L <= max_l; ++L)
    if (feasible_rate(p, L, opts).feasible) return L;
  return std::nullopt;
}

std::string oracle_result_to_json(const OracleResult& r) {
  return detail::oracle_json(r).dump(2) + "\n";
}

}  // namespace ixc
