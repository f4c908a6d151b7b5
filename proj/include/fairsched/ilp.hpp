#pragma once

// Solver-agnostic 0-1 integer linear models. Three constraint forms are kept
// first-class: plain linear rows, implications (indicator => row), and
// reifications (indicator <=> row). The built-in solver propagates the latter
// two natively; linearize() rewrites them with per-constraint big-M bounds
// for text export.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fairsched/errors.hpp"

namespace fairsched {

using Var = int;

enum class Rel { Le, Ge, Eq };

inline const char* to_string(Rel r) {
  switch (r) {
    case Rel::Le: return "<=";
    case Rel::Ge: return ">=";
    case Rel::Eq: return "=";
  }
  return "?";
}

struct Term {
  long long coeff = 0;
  Var var = -1;
};

struct LinExpr {
  std::vector<Term> terms;
  long long constant = 0;

  LinExpr& add(long long coeff, Var v) {
    terms.push_back({coeff, v});
    return *this;
  }

  // Merge duplicate variables, drop zero coefficients, sort by variable.
  void canonicalize() {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> merged;
    for (const Term& t : terms) {
      if (!merged.empty() && merged.back().var == t.var)
        merged.back().coeff += t.coeff;
      else
        merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coeff == 0; }),
                 merged.end());
    terms = std::move(merged);
  }

  long long value(std::span<const uint8_t> assignment) const {
    long long v = constant;
    for (const Term& t : terms) v += t.coeff * assignment[t.var];
    return v;
  }

  // Extremes over the 0-1 box, from coefficient signs.
  long long min_value() const {
    long long v = constant;
    for (const Term& t : terms)
      if (t.coeff < 0) v += t.coeff;
    return v;
  }
  long long max_value() const {
    long long v = constant;
    for (const Term& t : terms)
      if (t.coeff > 0) v += t.coeff;
    return v;
  }
};

// A single row `expr rel bound`. The expression's constant is folded into the
// bound on construction, so stored rows always have constant 0.
struct LinearCon {
  LinExpr expr;
  Rel rel = Rel::Le;
  long long bound = 0;

  LinearCon() = default;
  LinearCon(LinExpr e, Rel r, long long b) : expr(std::move(e)), rel(r), bound(b) {
    expr.canonicalize();
    bound -= expr.constant;
    expr.constant = 0;
  }

  bool holds(std::span<const uint8_t> assignment) const {
    const long long v = expr.value(assignment);
    switch (rel) {
      case Rel::Le: return v <= bound;
      case Rel::Ge: return v >= bound;
      case Rel::Eq: return v == bound;
    }
    return false;
  }
};

struct Constraint {
  enum class Kind { Linear, Implication, Reified };
  Kind kind = Kind::Linear;
  Var indicator = -1;  // unused for Kind::Linear
  LinearCon body;
};

enum class Sense { Maximize, Minimize };

// A 0-1 model: named binary variables, constraints, one linear objective.
// Variable names double as decode metadata; they encode the domain tuple the
// variable stands for (e.g. "a[algebra,turing,s03]").
class IpModel {
 public:
  Var add_var(const std::string& name) {
    if (index_.count(name)) throw DuplicateNameError("variable name already used: " + name);
    const Var v = static_cast<Var>(names_.size());
    names_.push_back(name);
    index_.emplace(name, v);
    return v;
  }

  int var_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(Var v) const { return names_.at(static_cast<size_t>(v)); }
  std::optional<Var> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void add_linear(LinExpr e, Rel rel, long long bound) {
    Constraint c;
    c.kind = Constraint::Kind::Linear;
    c.body = LinearCon(std::move(e), rel, bound);
    check_vars(c);
    constraints_.push_back(std::move(c));
  }

  // indicator == 1  =>  (e rel bound)
  void add_implication(Var indicator, LinExpr e, Rel rel, long long bound) {
    Constraint c;
    c.kind = Constraint::Kind::Implication;
    c.indicator = indicator;
    c.body = LinearCon(std::move(e), rel, bound);
    check_indicator(indicator);
    check_vars(c);
    constraints_.push_back(std::move(c));
  }

  // indicator == 1  <=>  (e rel bound); rel must be Le or Ge.
  void add_reified(Var indicator, LinExpr e, Rel rel, long long bound) {
    if (rel == Rel::Eq)
      throw UnsupportedConstraintError("reified equality is not supported (its negation is disjunctive)");
    Constraint c;
    c.kind = Constraint::Kind::Reified;
    c.indicator = indicator;
    c.body = LinearCon(std::move(e), rel, bound);
    check_indicator(indicator);
    check_vars(c);
    constraints_.push_back(std::move(c));
  }

  void set_objective(Sense sense, LinExpr e) {
    e.canonicalize();
    for (const Term& t : e.terms) check_var(t.var);
    sense_ = sense;
    objective_ = std::move(e);
  }

  const std::vector<Constraint>& constraints() const { return constraints_; }
  Sense sense() const { return sense_; }
  const LinExpr& objective() const { return objective_; }
  const std::vector<std::string>& names() const { return names_; }

  bool is_linear() const {
    for (const Constraint& c : constraints_)
      if (c.kind != Constraint::Kind::Linear) return false;
    return true;
  }

 private:
  void check_var(Var v) const {
    if (v < 0 || v >= var_count()) throw Error("constraint references unregistered variable");
  }
  void check_indicator(Var v) const { check_var(v); }
  void check_vars(const Constraint& c) const {
    for (const Term& t : c.body.expr.terms) check_var(t.var);
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Var> index_;
  std::vector<Constraint> constraints_;
  Sense sense_ = Sense::Maximize;
  LinExpr objective_;
};

struct EvalResult {
  bool satisfied = false;
  long long objective = 0;
};

// Checks every constraint under a total assignment; implications and
// reifications are evaluated semantically. Used by the brute-force oracle.
inline EvalResult eval(const IpModel& model, std::span<const uint8_t> assignment) {
  if (static_cast<int>(assignment.size()) != model.var_count())
    throw PartialAssignmentError("assignment covers " + std::to_string(assignment.size()) + " of " +
                                 std::to_string(model.var_count()) + " variables");
  EvalResult r;
  r.satisfied = true;
  for (const Constraint& c : model.constraints()) {
    switch (c.kind) {
      case Constraint::Kind::Linear:
        if (!c.body.holds(assignment)) r.satisfied = false;
        break;
      case Constraint::Kind::Implication:
        if (assignment[c.indicator] == 1 && !c.body.holds(assignment)) r.satisfied = false;
        break;
      case Constraint::Kind::Reified:
        if ((assignment[c.indicator] == 1) != c.body.holds(assignment)) r.satisfied = false;
        break;
    }
    if (!r.satisfied) break;
  }
  r.objective = model.objective().value(assignment);
  return r;
}

namespace detail {

// b == active_value  =>  (expr rel bound), rewritten as pure rows into `out`.
// M is derived from the expression's box extremes, never a fixed constant.
inline void emit_implication(IpModel& out, Var b, bool active_value, const LinearCon& con) {
  auto emit_le = [&](const LinExpr& e, long long k) {
    // always true over the box: drop
    if (e.max_value() <= k) return;
    // never true: force the indicator to the inactive value
    if (e.min_value() > k) {
      LinExpr fix;
      fix.add(1, b);
      out.add_linear(std::move(fix), active_value ? Rel::Le : Rel::Ge, active_value ? 0 : 1);
      return;
    }
    const long long big_m = e.max_value() - k;
    LinExpr row = e;
    // e <= k + M(1-b)  when active on b=1;  e <= k + M b  when active on b=0
    if (active_value) {
      row.add(big_m, b);
      out.add_linear(std::move(row), Rel::Le, k + big_m);
    } else {
      row.add(-big_m, b);
      out.add_linear(std::move(row), Rel::Le, k);
    }
  };

  switch (con.rel) {
    case Rel::Le: emit_le(con.expr, con.bound); break;
    case Rel::Ge: {
      LinExpr neg;
      for (const Term& t : con.expr.terms) neg.add(-t.coeff, t.var);
      emit_le(neg, -con.bound);
      break;
    }
    case Rel::Eq: {
      emit_le(con.expr, con.bound);
      LinExpr neg;
      for (const Term& t : con.expr.terms) neg.add(-t.coeff, t.var);
      emit_le(neg, -con.bound);
      break;
    }
  }
}

inline LinearCon negate(const LinearCon& con) {
  // integral data: not(e <= k)  is  e >= k+1;  not(e >= k)  is  e <= k-1
  if (con.rel == Rel::Le) return LinearCon(con.expr, Rel::Ge, con.bound + 1);
  return LinearCon(con.expr, Rel::Le, con.bound - 1);
}

}  // namespace detail

// Rewrites all implications and reifications into plain linear rows over the
// same variable set; the satisfying assignments are unchanged.
inline IpModel linearize(const IpModel& model) {
  IpModel out;
  for (const std::string& n : model.names()) out.add_var(n);
  for (const Constraint& c : model.constraints()) {
    switch (c.kind) {
      case Constraint::Kind::Linear:
        out.add_linear(c.body.expr, c.body.rel, c.body.bound);
        break;
      case Constraint::Kind::Implication:
        detail::emit_implication(out, c.indicator, true, c.body);
        break;
      case Constraint::Kind::Reified:
        if (c.body.rel == Rel::Eq)
          throw UnsupportedConstraintError("reified equality is not supported");
        detail::emit_implication(out, c.indicator, true, c.body);
        detail::emit_implication(out, c.indicator, false, detail::negate(c.body));
        break;
    }
  }
  out.set_objective(model.sense(), model.objective());
  return out;
}

}  // namespace fairsched
