#pragma once

// Shared fixtures and oracles for the test suites.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "fairsched/core.hpp"
#include "fairsched/datagen.hpp"
#include "fairsched/encoder.hpp"
#include "fairsched/ilp.hpp"
#include "fairsched/solver.hpp"
#include "fairsched/validator.hpp"

namespace fstest {

using namespace fairsched;

// Smallest schedulable world: one course, one instructor, one student, one
// room, one slot, frequency 1.
inline Instance unit_instance() {
  Instance inst;
  inst.weekdays = 1;
  inst.periods = 1;
  inst.courses = {{"alg", 1, {}}};
  inst.instructors = {{"ada", {0}, 0, 1}};
  inst.students = {{"amy", {0}, 0, 1, {1.0}, {}}};
  inst.rooms = {{"r0", {0}, 0, 5}};
  return inst;
}

// Two students contesting one seat: s0 dominates s1 on both priority and
// interest for course c0, so (s0, s1, c0) is the only envy-eligible triple.
// Course c1 has a prerequisite graded equally for both students, which ties
// their priorities there and keeps c1 out of the triple set.
inline Instance contested_seat_instance() {
  Instance inst;
  inst.weekdays = 2;
  inst.periods = 1;
  inst.courses = {{"c0", 1, {}}, {"c1", 1, {0}}};
  inst.instructors = {{"i0", {0, 1}, 0, 4}};
  inst.students = {
      {"s0", {0, 1}, 1, 1, {0.8, 0.2}, {{0, 3.0}}},
      {"s1", {0, 1}, 1, 2, {0.6, 0.4}, {{0, 3.0}}},
  };
  inst.rooms = {{"r0", {0, 1}, 0, 1}};  // capacity 1: only one student per unit
  return inst;
}

// Deterministic schedule for unit_instance: the single possible full one.
inline Schedule unit_schedule() {
  Schedule s;
  s.lectures = {{0, 0}};
  s.assignments = {{{0, 0}, 0}};
  s.units = {{{0, 0}, 0, {0, 0}}};
  return s;
}

inline double urand(std::mt19937_64& rng) { return fairsched::detail::uniform01(rng); }
inline int irand(std::mt19937_64& rng, int lo, int hi) { return fairsched::detail::uniform_int(rng, lo, hi); }

// Random instances small enough for exhaustive model enumeration: at most 3
// students, 3 courses, 2 instructors, 2 rooms, 4 slots.
inline Instance random_tiny_instance(uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance inst;
  const int ncourses = irand(rng, 1, 3);
  const int ninstr = irand(rng, 1, 2);
  const int nstud = irand(rng, 1, 3);
  const int nrooms = irand(rng, 1, 2);
  inst.weekdays = irand(rng, 1, 2);
  inst.periods = irand(rng, 1, 2);

  for (int c = 0; c < ncourses; ++c)
    inst.courses.push_back({"c" + std::to_string(c), irand(rng, 1, inst.weekdays), {}});
  // occasional prerequisite chain
  for (int c = 1; c < ncourses; ++c)
    if (urand(rng) < 0.3) inst.courses[c].prerequisites = {irand(rng, 0, c - 1)};

  for (int i = 0; i < ninstr; ++i) {
    Instructor in;
    in.id = "i" + std::to_string(i);
    for (int c = 0; c < ncourses; ++c)
      if (urand(rng) < 0.75) in.eligible.push_back(c);
    in.min_units = urand(rng) < 0.2 ? 1 : 0;
    in.max_units = irand(rng, 1, 4);
    if (in.min_units > in.max_units) in.min_units = 0;
    inst.instructors.push_back(std::move(in));
  }
  for (int r = 0; r < nrooms; ++r) {
    Room rm;
    rm.id = "r" + std::to_string(r);
    for (int c = 0; c < ncourses; ++c)
      if (urand(rng) < 0.75) rm.eligible.push_back(c);
    rm.min_capacity = urand(rng) < 0.15 ? 1 : 0;
    rm.max_capacity = irand(rng, rm.min_capacity > 0 ? 1 : 0, nstud);
    inst.rooms.push_back(std::move(rm));
  }
  for (int s = 0; s < nstud; ++s) {
    Student st;
    st.id = "s" + std::to_string(s);
    for (int c = 0; c < ncourses; ++c)
      if (urand(rng) < 0.8) st.eligible.push_back(c);
    st.min_courses = urand(rng) < 0.4 ? std::min<int>(1, st.eligible.size()) : 0;
    st.max_courses = irand(rng, std::max(1, st.min_courses), ncourses);
    std::vector<double> raw(ncourses, 0.0);
    for (int c = 0; c < ncourses; ++c) raw[c] = 0.05 + urand(rng);
    st.interest = fairsched::detail::quantize_interest(normalize_interest(std::move(raw)));
    inst.students.push_back(std::move(st));
  }
  // grades for every prerequisite of an eligible course
  for (auto& st : inst.students)
    for (int c : st.eligible)
      for (int p : inst.courses[c].prerequisites)
        if (!st.grades.count(p)) st.grades[p] = fairsched::detail::quantize(urand(rng) * 4.0, 0.01);
  return inst;
}

// Intended meaning of every auxiliary variable under a total assignment:
//   cp[s,c]  == some a[c,i,s] is set
//   up[s,u]  == a[c,i,s] and u[c,i,r,t] both set
//   beta[s,s'] <=> s holds strictly fewer courses than s'
//   alpha[s,s'] >= 1 whenever a witness triple fires under the assignment
inline bool linking_semantics_hold(const Instance& inst, const VarCatalog& cat,
                                   std::span<const uint8_t> a) {
  for (const auto& [key, cp] : cat.course_part) {
    const auto [s, c] = key;
    int any = 0;
    for (const auto& [akey, avar] : cat.assign) {
      const auto [ac, ai, as] = akey;
      if (ac == c && as == s && a[avar]) any = 1;
    }
    if (a[cp] != any) return false;
  }
  for (const auto& [key, up] : cat.unit_part) {
    const auto [s, c, i, r, t] = key;
    const int want = (a[cat.assign.at({c, i, s})] && a[cat.unit.at({c, i, r, t})]) ? 1 : 0;
    if (a[up] != want) return false;
  }
  if (!cat.alpha.empty()) {
    // course counts per student from cp variables
    std::map<int, int> count;
    for (const auto& [key, cp] : cat.course_part)
      if (a[cp]) ++count[key.first];
    for (const auto& [key, beta] : cat.beta) {
      const auto [s, t] = key;
      const bool fewer = count[s] < count[t];
      if ((a[beta] == 1) != fewer) return false;
    }
    for (const auto& [key, alpha] : cat.alpha) {
      const auto [s, t] = key;
      bool witness = false;
      if (count[s] < count[t]) {
        for (const EnvyTriple& tr : cat.triples) {
          if (tr.envious != s || tr.envied != t) continue;
          auto cps = cat.course_part.find({s, tr.course});
          auto cpt = cat.course_part.find({t, tr.course});
          if (cpt != cat.course_part.end() && a[cpt->second] &&
              (cps == cat.course_part.end() || !a[cps->second]))
            witness = true;
        }
      }
      if (witness && a[alpha] != 1) return false;
    }
  }
  return true;
}

// Builds the indicator vector of a schedule, with auxiliary variables set to
// their intended values.
inline std::vector<uint8_t> indicator_of(const Instance& inst, const VarCatalog& cat, const IpModel& model,
                                         const Schedule& sched) {
  std::vector<uint8_t> a(model.var_count(), 0);
  for (const Lecture& l : sched.lectures) {
    auto it = cat.lecture.find({l.course, l.instructor});
    if (it != cat.lecture.end()) a[it->second] = 1;
  }
  for (const Assignment& as : sched.assignments) {
    auto it = cat.assign.find({as.lecture.course, as.lecture.instructor, as.student});
    if (it != cat.assign.end()) a[it->second] = 1;
  }
  for (const Unit& u : sched.units) {
    auto it = cat.unit.find({u.lecture.course, u.lecture.instructor, u.room, inst.slot_index(u.slot)});
    if (it != cat.unit.end()) a[it->second] = 1;
  }
  for (const auto& [key, cp] : cat.course_part) {
    const auto [s, c] = key;
    for (const auto& [akey, avar] : cat.assign) {
      const auto [ac, ai, as] = akey;
      if (ac == c && as == s && a[avar]) a[cp] = 1;
    }
  }
  for (const auto& [key, up] : cat.unit_part) {
    const auto [s, c, i, r, t] = key;
    if (a[cat.assign.at({c, i, s})] && a[cat.unit.at({c, i, r, t})]) a[up] = 1;
  }
  if (!cat.alpha.empty()) {
    std::map<int, int> count;
    for (const auto& [key, cp] : cat.course_part)
      if (a[cp]) ++count[key.first];
    for (const auto& [key, beta] : cat.beta)
      if (count[key.first] < count[key.second]) a[beta] = 1;
    for (const auto& [key, alpha] : cat.alpha) {
      const auto [s, t] = key;
      if (count[s] >= count[t]) continue;
      for (const EnvyTriple& tr : cat.triples) {
        if (tr.envious != s || tr.envied != t) continue;
        auto cps = cat.course_part.find({s, tr.course});
        auto cpt = cat.course_part.find({t, tr.course});
        if (cpt != cat.course_part.end() && a[cpt->second] &&
            (cps == cat.course_part.end() || !a[cps->second]))
          a[alpha] = 1;
      }
    }
  }
  return a;
}

// Reference lexicographic optimum by enumeration: maximize `primary`, then
// minimize `secondary` among primary-optimal satisfying assignments.
struct LexOracle {
  bool feasible = false;
  long long primary = 0;
  long long secondary = 0;
};

inline LexOracle brute_force_lex(const IpModel& model, const LinExpr& primary, const LinExpr& secondary) {
  const int n = model.var_count();
  LexOracle out;
  std::vector<uint8_t> a(n, 0);
  for (uint64_t bits = 0; bits < (1ull << n); ++bits) {
    for (int v = 0; v < n; ++v) a[v] = (bits >> v) & 1;
    if (!eval(model, a).satisfied) continue;
    const long long p = primary.value(a);
    const long long s = secondary.value(a);
    if (!out.feasible || p > out.primary || (p == out.primary && s < out.secondary)) {
      out.feasible = true;
      out.primary = p;
      out.secondary = s;
    }
  }
  return out;
}

}  // namespace fstest
