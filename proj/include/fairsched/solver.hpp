#pragma once

// Exact 0-1 optimizer: depth-first branch and bound with bound-consistency
// propagation on linear rows, native handling of implication/reified
// constraints, activity-based branching, and objective pruning against the
// incumbent. A brute-force enumerator doubles as the testing oracle, and a
// two-phase driver implements lexicographic solves.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "fairsched/ilp.hpp"

namespace fairsched {

enum class SolveStatus { Optimal, Feasible, Infeasible, Timeout };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Timeout: return "timeout";
  }
  return "?";
}

enum class Branching { Activity, FirstUnassigned, Random };

struct SolveConfig {
  double time_limit_s = 60.0;
  uint64_t seed = 0;
  Branching branching = Branching::Activity;
  int threads = 1;
  long long log_every = 0;        // 0 disables progress lines
  std::ostream* log = nullptr;    // defaults to std::clog when logging
  std::vector<uint8_t> hint;      // optional full assignment guiding value ordering
  bool hint_as_incumbent = true;  // install a satisfying hint as the starting incumbent
};

struct SolveStats {
  long long nodes = 0;
  long long propagations = 0;
  double wall_s = 0.0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<std::vector<uint8_t>> assignment;
  std::optional<long long> objective;
  SolveStats stats;
};

namespace detail {

constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

// Indexed max-heap over variables ordered by (activity desc, index asc).
class VarHeap {
 public:
  void init(int n, const std::vector<double>* act) {
    act_ = act;
    pos_.assign(n, -1);
    heap_.clear();
    for (int v = 0; v < n; ++v) push(v);
  }
  bool empty() const { return heap_.empty(); }
  void push(int v) {
    if (pos_[v] >= 0) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(pos_[v]);
  }
  int pop() {
    const int v = heap_[0];
    swap_at(0, static_cast<int>(heap_.size()) - 1);
    heap_.pop_back();
    pos_[v] = -1;
    if (!heap_.empty()) down(0);
    return v;
  }
  void bumped(int v) {
    if (pos_[v] >= 0) up(pos_[v]);
  }

 private:
  bool before(int a, int b) const {
    const double aa = (*act_)[a], ab = (*act_)[b];
    if (aa != ab) return aa > ab;
    return a < b;
  }
  void up(int i) {
    while (i > 0) {
      const int p = (i - 1) / 2;
      if (!before(heap_[i], heap_[p])) break;
      swap_at(i, p);
      i = p;
    }
  }
  void down(int i) {
    const int n = static_cast<int>(heap_.size());
    while (true) {
      int best = i;
      const int l = 2 * i + 1, r = 2 * i + 2;
      if (l < n && before(heap_[l], heap_[best])) best = l;
      if (r < n && before(heap_[r], heap_[best])) best = r;
      if (best == i) break;
      swap_at(i, best);
      i = best;
    }
  }
  void swap_at(int a, int b) {
    std::swap(heap_[a], heap_[b]);
    pos_[heap_[a]] = a;
    pos_[heap_[b]] = b;
  }
  const std::vector<double>* act_ = nullptr;
  std::vector<int> pos_;
  std::vector<int> heap_;
};

// Incumbent shared between workers; monotone in the internal (maximized)
// objective value.
struct Incumbent {
  std::atomic<long long> value{kNegInf};
  std::mutex mutex;
  std::vector<uint8_t> assignment;

  bool offer(long long v, std::vector<uint8_t>&& a) {
    if (v <= value.load(std::memory_order_relaxed)) return false;
    std::lock_guard<std::mutex> lock(mutex);
    if (v <= value.load(std::memory_order_relaxed)) return false;
    assignment = std::move(a);
    value.store(v, std::memory_order_relaxed);
    return true;
  }
};

// One search instance. Internally always maximizes; a minimizing model is
// negated on entry and results are negated back by the caller.
class Engine {
 public:
  Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  void build(const IpModel& model) {
    nvars_ = model.var_count();
    negated_ = model.sense() == Sense::Minimize;
    obj_coeff_.assign(nvars_, 0);
    obj_const_ = model.objective().constant;
    for (const Term& t : model.objective().terms) obj_coeff_[t.var] += t.coeff;
    if (negated_) {
      for (auto& c : obj_coeff_) c = -c;
      obj_const_ = -obj_const_;
    }

    rows_.clear();
    for (const Constraint& c : model.constraints()) {
      switch (c.kind) {
        case Constraint::Kind::Linear:
          add_rows(-1, true, c.body);
          break;
        case Constraint::Kind::Implication:
          add_rows(c.indicator, true, c.body);
          break;
        case Constraint::Kind::Reified: {
          if (c.body.rel == Rel::Eq)
            throw UnsupportedConstraintError("reified equality is not supported by the solver");
          add_rows(c.indicator, true, c.body);
          const LinearCon neg = c.body.rel == Rel::Le ? LinearCon(c.body.expr, Rel::Ge, c.body.bound + 1)
                                                      : LinearCon(c.body.expr, Rel::Le, c.body.bound - 1);
          add_rows(c.indicator, false, neg);
          break;
        }
      }
    }

    occs_.assign(nvars_, {});
    ind_occs_.assign(nvars_, {});
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [coeff, var] : rows_[r].terms) occs_[var].push_back({static_cast<int>(r), coeff});
      if (rows_[r].indicator >= 0) ind_occs_[rows_[r].indicator].push_back(static_cast<int>(r));
    }

    value_.assign(nvars_, -1);
    activity_.assign(nvars_, 0.0);
    in_queue_.assign(rows_.size(), 0);
    for (Row& row : rows_) {
      row.min_now = 0;
      for (const auto& [coeff, var] : row.terms)
        if (coeff < 0) row.min_now += coeff;
    }
    obj_fixed_ = obj_const_;
    select_group_rows();
  }

  void configure(const SolveConfig& cfg, Incumbent* shared) {
    cfg_ = cfg;
    shared_ = shared;
    rng_.seed(cfg.seed);
    heap_.init(nvars_, &activity_);
    reset_open_potential();
  }

  void start_clock(double limit_s) {
    deadline_ = now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(limit_s));
    aborted_ = false;
  }

  void reset_to_root() {
    undo_to(0);
    clear_queue();
    reset_open_potential();
  }

  bool propagate_root() {
    for (size_t r = 0; r < rows_.size(); ++r) enqueue(static_cast<int>(r));
    return propagate();
  }

  // Assign var = val (if not already fixed) and propagate. False on conflict.
  bool assume(int var, uint8_t val) {
    if (value_[var] >= 0) return value_[var] == val;
    assign(var, val);
    return propagate();
  }

  // Depth-first search below the current trail. Returns false iff aborted.
  bool dfs() {
    if (aborted_) return false;
    if (upper_bound() <= shared_->value.load(std::memory_order_relaxed)) return true;
    const int var = pick_branch_var();
    if (var < 0) {
      // propagation runs after every assignment, so a complete conflict-free
      // trail satisfies all rows
      if (shared_->offer(obj_fixed_, assignment_snapshot()) && cfg_.log_every > 0) log_progress();
      return true;
    }
    ++stats_.nodes;
    if (cfg_.log_every > 0 && stats_.nodes % cfg_.log_every == 0) log_progress();
    if ((stats_.nodes & 255) == 0 && now() >= deadline_) {
      aborted_ = true;
      heap_.push(var);
      return false;
    }
    const uint8_t first = preferred_value(var);
    for (int k = 0; k < 2; ++k) {
      const uint8_t val = k == 0 ? first : static_cast<uint8_t>(1 - first);
      const size_t mark = trail_.size();
      if (assume(var, val)) {
        if (!dfs()) {
          undo_to(mark);
          return false;
        }
      }
      undo_to(mark);
    }
    heap_.push(var);
    return true;
  }

  bool aborted() const { return aborted_; }
  SolveStats& stats() { return stats_; }

 private:
  struct Row {
    std::vector<std::pair<long long, int>> terms;  // (coeff, var)
    long long bound = 0;
    int indicator = -1;  // -1: always active
    bool active_when = true;
    long long min_now = 0;  // min achievable LHS under the current partial assignment
  };
  struct GroupItem {
    int var;
    long long weight;
    long long gain;
  };
  struct GroupRow {
    int row;
    std::vector<GroupItem> items;
  };

  static std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

  void add_rows(int indicator, bool active_when, const LinearCon& con) {
    auto push_le = [&](const LinExpr& e, long long k) {
      Row row;
      for (const Term& t : e.terms) row.terms.push_back({t.coeff, t.var});
      row.bound = k;
      row.indicator = indicator;
      row.active_when = active_when;
      rows_.push_back(std::move(row));
    };
    auto negated_expr = [&](const LinExpr& e) {
      LinExpr neg;
      for (const Term& t : e.terms) neg.add(-t.coeff, t.var);
      neg.canonicalize();
      return neg;
    };
    switch (con.rel) {
      case Rel::Le: push_le(con.expr, con.bound); break;
      case Rel::Ge: push_le(negated_expr(con.expr), -con.bound); break;
      case Rel::Eq:
        push_le(con.expr, con.bound);
        push_le(negated_expr(con.expr), -con.bound);
        break;
    }
  }

  // Disjoint all-positive rows covering objective variables, used for a
  // groupwise objective bound that is much tighter than the variable-wise one.
  void select_group_rows() {
    covered_.assign(nvars_, 0);
    groups_.clear();
    std::vector<std::pair<long long, int>> candidates;  // (objective mass, row)
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Row& row = rows_[r];
      if (row.indicator >= 0 || row.bound < 0 || row.terms.empty()) continue;
      bool all_pos = true;
      long long mass = 0;
      for (const auto& [coeff, var] : row.terms) {
        if (coeff <= 0) {
          all_pos = false;
          break;
        }
        if (obj_coeff_[var] > 0) mass += obj_coeff_[var];
      }
      if (all_pos && mass > 0) candidates.push_back({mass, static_cast<int>(r)});
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [mass, r] : candidates) {
      bool disjoint = true;
      for (const auto& [coeff, var] : rows_[r].terms)
        if (obj_coeff_[var] > 0 && covered_[var]) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      GroupRow g;
      g.row = r;
      for (const auto& [coeff, var] : rows_[r].terms)
        if (obj_coeff_[var] > 0) {
          covered_[var] = 1;
          g.items.push_back({var, coeff, obj_coeff_[var]});
        }
      std::sort(g.items.begin(), g.items.end(), [](const GroupItem& a, const GroupItem& b) {
        const long long lhs = a.gain * b.weight, rhs = b.gain * a.weight;
        if (lhs != rhs) return lhs > rhs;  // gain/weight descending
        return a.var < b.var;
      });
      groups_.push_back(std::move(g));
    }
  }

  void reset_open_potential() {
    open_potential_ = 0;
    for (int v = 0; v < nvars_; ++v)
      if (obj_coeff_[v] > 0 && !covered_[v] && value_[v] < 0) open_potential_ += obj_coeff_[v];
  }

  long long upper_bound() const {
    long long ub = obj_fixed_ + open_potential_;
    for (const GroupRow& g : groups_) {
      const Row& row = rows_[g.row];
      long long slack = row.bound - row.min_now;
      if (slack <= 0) continue;
      for (const GroupItem& item : g.items) {
        if (value_[item.var] >= 0) continue;
        if (item.weight <= slack) {
          ub += item.gain;
          slack -= item.weight;
          if (slack == 0) break;
        } else {
          ub += item.gain * slack / item.weight;  // floor of the fractional fill
          break;
        }
      }
    }
    return ub;
  }

  uint8_t preferred_value(int var) const {
    if (!cfg_.hint.empty() && var < static_cast<int>(cfg_.hint.size())) return cfg_.hint[var] ? 1 : 0;
    return obj_coeff_[var] > 0 ? 1 : 0;
  }

  int pick_branch_var() {
    if (cfg_.branching == Branching::Random) {
      std::vector<int> open;
      for (int v = 0; v < nvars_; ++v)
        if (value_[v] < 0) open.push_back(v);
      if (open.empty()) return -1;
      return open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng_)];
    }
    while (!heap_.empty()) {
      const int v = heap_.pop();
      if (value_[v] < 0) return v;
    }
    return -1;
  }

  std::vector<uint8_t> assignment_snapshot() const {
    std::vector<uint8_t> a(nvars_, 0);
    for (int v = 0; v < nvars_; ++v) a[v] = value_[v] == 1 ? 1 : 0;
    return a;
  }

  void log_progress() const {
    std::ostream& os = cfg_.log ? *cfg_.log : std::clog;
    const long long best = shared_->value.load(std::memory_order_relaxed);
    os << "nodes=" << stats_.nodes << " propagations=" << stats_.propagations
       << " incumbent=" << (best == kNegInf ? std::string("none") : std::to_string(negated_ ? -best : best))
       << " bound=" << (negated_ ? -upper_bound() : upper_bound()) << " depth=" << trail_.size() << "\n";
  }

  void assign(int var, uint8_t val) {
    value_[var] = static_cast<int8_t>(val);
    trail_.push_back(var);
    if (obj_coeff_[var] > 0) {
      if (val) obj_fixed_ += obj_coeff_[var];
      if (!covered_[var]) open_potential_ -= obj_coeff_[var];
    } else if (obj_coeff_[var] < 0 && val) {
      obj_fixed_ += obj_coeff_[var];
    }
    for (const auto& [r, coeff] : occs_[var]) {
      rows_[r].min_now += (val ? coeff : 0) - std::min(0LL, coeff);
      enqueue(r);
    }
    for (int r : ind_occs_[var]) enqueue(r);
  }

  void unassign(int var) {
    const uint8_t val = static_cast<uint8_t>(value_[var]);
    for (const auto& [r, coeff] : occs_[var]) rows_[r].min_now -= (val ? coeff : 0) - std::min(0LL, coeff);
    if (obj_coeff_[var] > 0) {
      if (val) obj_fixed_ -= obj_coeff_[var];
      if (!covered_[var]) open_potential_ += obj_coeff_[var];
    } else if (obj_coeff_[var] < 0 && val) {
      obj_fixed_ -= obj_coeff_[var];
    }
    value_[var] = -1;
    heap_.push(var);
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      const int var = trail_.back();
      trail_.pop_back();
      unassign(var);
    }
  }

  void enqueue(int r) {
    if (!in_queue_[r]) {
      in_queue_[r] = 1;
      queue_.push_back(r);
    }
  }

  void clear_queue() {
    for (int r : queue_) in_queue_[r] = 0;
    queue_.clear();
  }

  // Fixed-point pass over queued rows. Returns false on conflict.
  bool propagate() {
    while (!queue_.empty()) {
      const int r = queue_.back();
      queue_.pop_back();
      in_queue_[r] = 0;
      Row& row = rows_[r];

      int state;  // 0 dormant, 1 active, 2 pending on an unassigned indicator
      if (row.indicator < 0)
        state = 1;
      else if (value_[row.indicator] < 0)
        state = 2;
      else
        state = (value_[row.indicator] == (row.active_when ? 1 : 0)) ? 1 : 0;
      if (state == 0) continue;

      const long long slack = row.bound - row.min_now;
      if (slack < 0) {
        if (state == 1) {
          bump_conflict(row);
          clear_queue();
          return false;
        }
        // body impossible: the indicator takes the inactive value
        ++stats_.propagations;
        assign(row.indicator, row.active_when ? 0 : 1);
        continue;
      }
      if (state != 1) continue;
      // forcing the "expensive" value of any term would overshoot the bound;
      // assigning the forced value leaves this row's min_now unchanged
      for (const auto& [coeff, var] : row.terms) {
        if (value_[var] >= 0) continue;
        if (coeff > 0 && coeff > slack) {
          ++stats_.propagations;
          assign(var, 0);
        } else if (coeff < 0 && -coeff > slack) {
          ++stats_.propagations;
          assign(var, 1);
        }
      }
    }
    return true;
  }

  void bump_conflict(const Row& row) {
    if (cfg_.branching != Branching::Activity) return;
    for (const auto& [coeff, var] : row.terms) bump(var);
    if (row.indicator >= 0) bump(row.indicator);
    act_inc_ /= 0.95;
    if (act_inc_ > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      act_inc_ *= 1e-100;
    }
  }

  void bump(int var) {
    activity_[var] += act_inc_;
    heap_.bumped(var);
  }

  int nvars_ = 0;
  bool negated_ = false;
  std::vector<long long> obj_coeff_;
  long long obj_const_ = 0;
  std::vector<Row> rows_;
  std::vector<std::vector<std::pair<int, long long>>> occs_;  // var -> (row, coeff)
  std::vector<std::vector<int>> ind_occs_;
  std::vector<int8_t> value_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<uint8_t> in_queue_;
  std::vector<double> activity_;
  double act_inc_ = 1.0;
  VarHeap heap_;
  std::mt19937_64 rng_;
  std::vector<uint8_t> covered_;
  std::vector<GroupRow> groups_;
  long long obj_fixed_ = 0;
  long long open_potential_ = 0;
  SolveConfig cfg_;
  Incumbent* shared_ = nullptr;
  SolveStats stats_;
  std::chrono::steady_clock::time_point deadline_;
  bool aborted_ = false;
};

}  // namespace detail

// Exhaustive enumeration over all 2^n assignments; the oracle the search is
// tested against.
inline SolveOutcome brute_force(const IpModel& model, int cap = 24) {
  const int n = model.var_count();
  if (n > cap)
    throw TooLargeError("brute force over " + std::to_string(n) + " variables exceeds cap " +
                        std::to_string(cap));
  const auto t0 = std::chrono::steady_clock::now();
  SolveOutcome out;
  std::vector<uint8_t> a(n, 0);
  bool found = false;
  long long best = 0;
  std::vector<uint8_t> best_a;
  const uint64_t total = 1ull << n;
  for (uint64_t bits = 0; bits < total; ++bits) {
    for (int v = 0; v < n; ++v) a[v] = (bits >> v) & 1;
    const EvalResult r = eval(model, a);
    if (!r.satisfied) continue;
    const long long value = model.sense() == Sense::Maximize ? r.objective : -r.objective;
    if (!found || value > best) {
      found = true;
      best = value;
      best_a = a;
    }
  }
  out.stats.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!found) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  out.status = SolveStatus::Optimal;
  out.assignment = std::move(best_a);
  out.objective = model.sense() == Sense::Maximize ? best : -best;
  return out;
}

inline SolveOutcome solve(const IpModel& model, const SolveConfig& config = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  SolveOutcome out;

  detail::Incumbent incumbent;
  if (!config.hint.empty() && config.hint_as_incumbent &&
      static_cast<int>(config.hint.size()) == model.var_count()) {
    const EvalResult r = eval(model, config.hint);
    if (r.satisfied) {
      std::vector<uint8_t> copy = config.hint;
      incumbent.offer(model.sense() == Sense::Maximize ? r.objective : -r.objective, std::move(copy));
    }
  }

  SolveStats stats;
  bool completed = true;
  const int threads = std::max(1, config.threads);

  if (threads == 1) {
    detail::Engine eng;
    eng.build(model);
    eng.configure(config, &incumbent);
    eng.start_clock(config.time_limit_s);
    if (eng.propagate_root()) completed = eng.dfs();
    stats = eng.stats();
  } else {
    // Workers draw bit-prefixes over the lowest-indexed variables and explore
    // the induced disjoint subtrees against a shared incumbent.
    int k = 0;
    while ((1 << k) < 8 * threads && k < std::min(model.var_count(), 12)) ++k;
    std::atomic<uint32_t> next{0};
    std::atomic<bool> any_abort{false};
    std::mutex stats_mutex;
    auto worker = [&] {
      detail::Engine eng;
      eng.build(model);
      eng.configure(config, &incumbent);
      const uint32_t total = 1u << k;
      while (!any_abort.load()) {
        const uint32_t bits = next.fetch_add(1);
        if (bits >= total) break;
        eng.reset_to_root();
        eng.start_clock(config.time_limit_s - elapsed());
        bool ok = eng.propagate_root();
        for (int j = 0; ok && j < k; ++j) ok = eng.assume(j, (bits >> j) & 1);
        if (ok && !eng.dfs()) any_abort.store(true);
        if (eng.aborted()) any_abort.store(true);
      }
      std::lock_guard<std::mutex> lock(stats_mutex);
      stats.nodes += eng.stats().nodes;
      stats.propagations += eng.stats().propagations;
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    completed = !any_abort.load();
  }

  out.stats = stats;
  out.stats.wall_s = elapsed();

  const long long best = incumbent.value.load();
  const bool have = best != detail::kNegInf;
  if (have) {
    out.status = completed ? SolveStatus::Optimal : SolveStatus::Feasible;
    out.assignment = incumbent.assignment;
    out.objective = model.sense() == Sense::Maximize ? best : -best;
  } else {
    out.status = completed ? SolveStatus::Infeasible : SolveStatus::Timeout;
  }
  return out;
}

struct LexOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<std::vector<uint8_t>> assignment;
  std::optional<long long> primary;    // first-phase objective value
  std::optional<long long> secondary;  // second-phase objective value
  SolveStats stats;
};

// Two-phase lexicographic solve over one model: maximize `primary`, then fix
// it at its achieved value and minimize `secondary`. The phase-1 solution
// seeds phase 2, so a feasible phase 1 always yields a two-objective outcome.
inline LexOutcome solve_lexicographic(const IpModel& model, const LinExpr& primary, const LinExpr& secondary,
                                      const SolveConfig& config = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  LexOutcome out;

  IpModel phase1 = model;
  phase1.set_objective(Sense::Maximize, primary);
  SolveOutcome r1 = solve(phase1, config);
  out.stats = r1.stats;
  if (r1.status == SolveStatus::Infeasible || r1.status == SolveStatus::Timeout) {
    out.status = r1.status;
    return out;
  }

  IpModel phase2 = model;
  phase2.add_linear(primary, Rel::Eq, *r1.objective);
  phase2.set_objective(Sense::Minimize, secondary);
  SolveConfig cfg2 = config;
  cfg2.hint = *r1.assignment;
  cfg2.hint_as_incumbent = true;
  cfg2.time_limit_s = std::max(0.2, config.time_limit_s - elapsed());
  SolveOutcome r2 = solve(phase2, cfg2);

  out.stats.nodes += r2.stats.nodes;
  out.stats.propagations += r2.stats.propagations;
  out.stats.wall_s = elapsed();
  out.assignment = r2.assignment ? r2.assignment : r1.assignment;
  out.primary = r1.objective;
  out.secondary = r2.objective ? r2.objective : std::optional<long long>(secondary.value(*out.assignment));
  out.status = (r1.status == SolveStatus::Optimal && r2.status == SolveStatus::Optimal)
                   ? SolveStatus::Optimal
                   : SolveStatus::Feasible;
  return out;
}

}  // namespace fairsched
