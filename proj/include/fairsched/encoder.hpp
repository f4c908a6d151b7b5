#pragma once

// Translation between problem instances and 0-1 models. Variables exist only
// for eligible combinations, so the eligibility constraints hold by
// construction: an ineligible (entity, course) pair simply has no variable.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fairsched/core.hpp"
#include "fairsched/ilp.hpp"

namespace fairsched {

struct EncodeOptions {
  enum class Mode { Hssp, Fhssp };
  Mode mode = Mode::Hssp;
  bool lexicographic = true;           // FHSSP drivers: fix max assignments, then minimize envy
  bool enforce_separate_days = true;   // each lecture meets at most once per day
  bool attendance_completeness = true; // enrolled students attend every unit of their lecture
  std::optional<int> per_day_instructor_bound;  // off by default
};

// Maps from domain tuples to model variables. Unit participation variables
// exist for students only; for instructors and rooms the unit variable itself
// already carries that information, so those aliases resolve to it.
struct VarCatalog {
  std::map<std::pair<int, int>, Var> lecture;                       // (c,i) -> l
  std::map<std::tuple<int, int, int>, Var> assign;                  // (c,i,s) -> a
  std::map<std::tuple<int, int, int, int>, Var> unit;               // (c,i,r,t) -> u
  std::map<std::pair<int, int>, Var> course_part;                   // (s,c) -> cp
  std::map<std::tuple<int, int, int, int, int>, Var> unit_part;     // (s,c,i,r,t) -> up
  std::map<std::pair<int, int>, Var> beta;                          // (s,s') -> fewer-courses indicator
  std::map<std::pair<int, int>, Var> alpha;                         // (s,s') -> envy indicator
  std::vector<EnvyTriple> triples;                                  // envy-eligible triples of the instance

  LinExpr assignment_sum() const {
    LinExpr e;
    for (const auto& [key, v] : assign) e.add(1, v);
    return e;
  }
  LinExpr envy_sum() const {
    LinExpr e;
    for (const auto& [key, v] : alpha) e.add(1, v);
    return e;
  }
};

struct BuiltModel {
  IpModel model;
  VarCatalog catalog;
};

namespace detail {

struct EncodeContext {
  const Instance& inst;
  const EncodeOptions& opts;
  VarCatalog& cat;
  IpModel& model;
  std::vector<std::vector<int>> instructors_of;  // course -> eligible instructors
  std::vector<std::vector<int>> rooms_of;        // course -> eligible rooms
  std::vector<std::vector<int>> students_of;     // course -> eligible students

  EncodeContext(const Instance& i, const EncodeOptions& o, VarCatalog& c, IpModel& m)
      : inst(i), opts(o), cat(c), model(m) {
    const int nc = static_cast<int>(inst.courses.size());
    instructors_of.resize(nc);
    rooms_of.resize(nc);
    students_of.resize(nc);
    for (size_t x = 0; x < inst.instructors.size(); ++x)
      for (int c : inst.instructors[x].eligible) instructors_of[c].push_back(static_cast<int>(x));
    for (size_t x = 0; x < inst.rooms.size(); ++x)
      for (int c : inst.rooms[x].eligible) rooms_of[c].push_back(static_cast<int>(x));
    for (size_t x = 0; x < inst.students.size(); ++x)
      for (int c : inst.students[x].eligible) students_of[c].push_back(static_cast<int>(x));
  }
};

inline std::string slot_suffix(const Instance& inst, int t) {
  return std::to_string(t / inst.periods) + "," + std::to_string(t % inst.periods);
}

inline void create_variables(EncodeContext& ctx) {
  const Instance& inst = ctx.inst;
  const int nc = static_cast<int>(inst.courses.size());
  const int slots = inst.slot_count();

  // assignment variables first: the search branches on low indices first
  for (int c = 0; c < nc; ++c)
    for (int i : ctx.instructors_of[c])
      for (int s : ctx.students_of[c])
        ctx.cat.assign[{c, i, s}] = ctx.model.add_var(
            "a[" + inst.courses[c].id + "," + inst.instructors[i].id + "," + inst.students[s].id + "]");

  for (int c = 0; c < nc; ++c)
    for (int i : ctx.instructors_of[c])
      ctx.cat.lecture[{c, i}] =
          ctx.model.add_var("l[" + inst.courses[c].id + "," + inst.instructors[i].id + "]");

  for (int c = 0; c < nc; ++c)
    for (int i : ctx.instructors_of[c])
      for (int r : ctx.rooms_of[c])
        for (int t = 0; t < slots; ++t)
          ctx.cat.unit[{c, i, r, t}] =
              ctx.model.add_var("u[" + inst.courses[c].id + "," + inst.instructors[i].id + "," +
                                inst.rooms[r].id + "," + slot_suffix(inst, t) + "]");

  for (size_t s = 0; s < inst.students.size(); ++s)
    for (int c : inst.students[s].eligible)
      ctx.cat.course_part[{static_cast<int>(s), c}] =
          ctx.model.add_var("cp[" + inst.students[s].id + "," + inst.courses[c].id + "]");

  for (int c = 0; c < nc; ++c)
    for (int i : ctx.instructors_of[c])
      for (int r : ctx.rooms_of[c])
        for (int t = 0; t < slots; ++t)
          for (int s : ctx.students_of[c])
            ctx.cat.unit_part[{s, c, i, r, t}] =
                ctx.model.add_var("up[" + inst.students[s].id + "," + inst.courses[c].id + "," +
                                  inst.instructors[i].id + "," + inst.rooms[r].id + "," +
                                  slot_suffix(inst, t) + "]");
}

// family 1: no entity attends two units in one time slot
inline void encode_time_exclusivity(EncodeContext& ctx) {
  const Instance& inst = ctx.inst;
  const int slots = inst.slot_count();

  for (size_t i = 0; i < inst.instructors.size(); ++i) {
    for (int t = 0; t < slots; ++t) {
      LinExpr e;
      for (int c : inst.instructors[i].eligible)
        for (int r : ctx.rooms_of[c]) {
          auto it = ctx.cat.unit.find({c, static_cast<int>(i), r, t});
          if (it != ctx.cat.unit.end()) e.add(1, it->second);
        }
      if (e.terms.size() >= 2) ctx.model.add_linear(std::move(e), Rel::Le, 1);
    }
  }
  for (size_t r = 0; r < inst.rooms.size(); ++r) {
    for (int t = 0; t < slots; ++t) {
      LinExpr e;
      for (int c : inst.rooms[r].eligible)
        for (int i : ctx.instructors_of[c]) {
          auto it = ctx.cat.unit.find({c, i, static_cast<int>(r), t});
          if (it != ctx.cat.unit.end()) e.add(1, it->second);
        }
      if (e.terms.size() >= 2) ctx.model.add_linear(std::move(e), Rel::Le, 1);
    }
  }
  for (size_t s = 0; s < inst.students.size(); ++s) {
    for (int t = 0; t < slots; ++t) {
      LinExpr e;
      for (int c : inst.students[s].eligible)
        for (int i : ctx.instructors_of[c])
          for (int r : ctx.rooms_of[c]) {
            auto it = ctx.cat.unit_part.find({static_cast<int>(s), c, i, r, t});
            if (it != ctx.cat.unit_part.end()) e.add(1, it->second);
          }
      if (e.terms.size() >= 2) ctx.model.add_linear(std::move(e), Rel::Le, 1);
    }
  }
}

// family 2: instructor weekly units, student course count, room capacity
inline void encode_numeric_bounds(EncodeContext& ctx) {
  const Instance& inst = ctx.inst;
  for (size_t i = 0; i < inst.instructors.size(); ++i) {
    LinExpr e;
    for (int c : inst.instructors[i].eligible)
      for (int r : ctx.rooms_of[c])
        for (int t = 0; t < inst.slot_count(); ++t) {
          auto it = ctx.cat.unit.find({c, static_cast<int>(i), r, t});
          if (it != ctx.cat.unit.end()) e.add(1, it->second);
        }
    const Instructor& in = inst.instructors[i];
    if (in.max_units < static_cast<int>(e.terms.size())) ctx.model.add_linear(e, Rel::Le, in.max_units);
    if (in.min_units > 0) ctx.model.add_linear(e, Rel::Ge, in.min_units);
  }
  for (size_t s = 0; s < inst.students.size(); ++s) {
    LinExpr e;
    for (int c : inst.students[s].eligible) e.add(1, ctx.cat.course_part.at({static_cast<int>(s), c}));
    const Student& st = inst.students[s];
    if (st.max_courses < static_cast<int>(e.terms.size())) ctx.model.add_linear(e, Rel::Le, st.max_courses);
    if (st.min_courses > 0) ctx.model.add_linear(e, Rel::Ge, st.min_courses);
  }
  // per unit: attendee count within the room's range; the lower bound only
  // applies to units that actually exist
  for (const auto& [key, uvar] : ctx.cat.unit) {
    const auto [c, i, r, t] = key;
    LinExpr e;
    for (int s : ctx.students_of[c]) e.add(1, ctx.cat.unit_part.at({s, c, i, r, t}));
    const Room& room = inst.rooms[r];
    if (room.max_capacity < static_cast<int>(e.terms.size()))
      ctx.model.add_linear(e, Rel::Le, room.max_capacity);
    if (room.min_capacity > 0) ctx.model.add_implication(uvar, std::move(e), Rel::Ge, room.min_capacity);
  }
}

// family 3: every existing lecture meets exactly its weekly frequency
inline void encode_lecture_frequency(EncodeContext& ctx) {
  for (const auto& [key, lvar] : ctx.cat.lecture) {
    const auto [c, i] = key;
    LinExpr e;
    for (int r : ctx.rooms_of[c])
      for (int t = 0; t < ctx.inst.slot_count(); ++t) e.add(1, ctx.cat.unit.at({c, i, r, t}));
    const int freq = ctx.inst.courses[c].frequency;
    ctx.model.add_linear(e, Rel::Le, freq);
    ctx.model.add_implication(lvar, std::move(e), Rel::Ge, freq);
  }
}

// family 4: one lecture section per course per student
inline void encode_single_assignment(EncodeContext& ctx) {
  for (int c = 0; c < static_cast<int>(ctx.inst.courses.size()); ++c) {
    for (int s : ctx.students_of[c]) {
      LinExpr e;
      for (int i : ctx.instructors_of[c]) e.add(1, ctx.cat.assign.at({c, i, s}));
      if (e.terms.size() >= 2) ctx.model.add_linear(std::move(e), Rel::Le, 1);
    }
  }
}

// family 5: unit participation coupling; with attendance completeness on, a
// student attends exactly the units of lectures they are enrolled in
inline void encode_unit_coupling(EncodeContext& ctx) {
  for (const auto& [key, up] : ctx.cat.unit_part) {
    const auto [s, c, i, r, t] = key;
    const Var u = ctx.cat.unit.at({c, i, r, t});
    const Var a = ctx.cat.assign.at({c, i, s});
    const Var cp = ctx.cat.course_part.at({s, c});
    ctx.model.add_linear(LinExpr().add(1, up).add(-1, u), Rel::Le, 0);
    ctx.model.add_linear(LinExpr().add(1, up).add(-1, a), Rel::Le, 0);
    ctx.model.add_linear(LinExpr().add(1, up).add(-1, cp), Rel::Le, 0);
    if (ctx.opts.attendance_completeness)
      ctx.model.add_linear(LinExpr().add(1, a).add(1, u).add(-1, up), Rel::Le, 1);
  }
}

// family 6: once per day per lecture; per-slot unit count bounded by the room
// pool; optional per-day instructor load bound
inline void encode_daily_and_room_limits(EncodeContext& ctx) {
  const Instance& inst = ctx.inst;
  if (ctx.opts.enforce_separate_days) {
    for (const auto& [key, lvar] : ctx.cat.lecture) {
      const auto [c, i] = key;
      for (int d = 0; d < inst.weekdays; ++d) {
        LinExpr e;
        for (int r : ctx.rooms_of[c])
          for (int p = 0; p < inst.periods; ++p) e.add(1, ctx.cat.unit.at({c, i, r, d * inst.periods + p}));
        if (e.terms.size() >= 2) ctx.model.add_linear(std::move(e), Rel::Le, 1);
      }
    }
  }
  const int nrooms = static_cast<int>(inst.rooms.size());
  for (int t = 0; t < inst.slot_count(); ++t) {
    LinExpr e;
    for (const auto& [key, uvar] : ctx.cat.unit)
      if (std::get<3>(key) == t) e.add(1, uvar);
    if (static_cast<int>(e.terms.size()) > nrooms) ctx.model.add_linear(std::move(e), Rel::Le, nrooms);
  }
  if (ctx.opts.per_day_instructor_bound) {
    const int cap = *ctx.opts.per_day_instructor_bound;
    for (size_t i = 0; i < inst.instructors.size(); ++i) {
      for (int d = 0; d < inst.weekdays; ++d) {
        LinExpr e;
        for (int c : inst.instructors[i].eligible)
          for (int r : ctx.rooms_of[c])
            for (int p = 0; p < inst.periods; ++p) {
              auto it = ctx.cat.unit.find({c, static_cast<int>(i), r, d * inst.periods + p});
              if (it != ctx.cat.unit.end()) e.add(1, it->second);
            }
        if (static_cast<int>(e.terms.size()) > cap) ctx.model.add_linear(std::move(e), Rel::Le, cap);
      }
    }
  }
}

// family 7: units and assignments require their lecture; an assignment
// requires at least one unit; course participation tracks assignments
inline void encode_consistency(EncodeContext& ctx) {
  for (const auto& [key, uvar] : ctx.cat.unit) {
    const auto [c, i, r, t] = key;
    ctx.model.add_linear(LinExpr().add(1, uvar).add(-1, ctx.cat.lecture.at({c, i})), Rel::Le, 0);
  }
  for (const auto& [key, avar] : ctx.cat.assign) {
    const auto [c, i, s] = key;
    const Var l = ctx.cat.lecture.at({c, i});
    const Var cp = ctx.cat.course_part.at({s, c});
    ctx.model.add_linear(LinExpr().add(1, avar).add(-1, l), Rel::Le, 0);
    LinExpr units;
    for (int r : ctx.rooms_of[c])
      for (int t = 0; t < ctx.inst.slot_count(); ++t) units.add(1, ctx.cat.unit.at({c, i, r, t}));
    ctx.model.add_implication(avar, std::move(units), Rel::Ge, 1);
    ctx.model.add_linear(LinExpr().add(1, avar).add(1, l).add(-1, cp), Rel::Le, 1);
  }
  for (const auto& [key, cp] : ctx.cat.course_part) {
    const auto [s, c] = key;
    LinExpr e;
    e.add(1, cp);
    for (int i : ctx.instructors_of[c]) e.add(-1, ctx.cat.assign.at({c, i, s}));
    ctx.model.add_linear(std::move(e), Rel::Le, 0);
  }
}

// family 8: envy indicators. beta[s,s'] reifies "s holds strictly fewer
// courses than s'"; each witness triple then pushes alpha[s,s'] up to 1.
inline void encode_envy(EncodeContext& ctx) {
  const Instance& inst = ctx.inst;
  ctx.cat.triples = envy_eligible_triples(inst);
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (const EnvyTriple& tr : ctx.cat.triples) by_pair[{tr.envious, tr.envied}].push_back(tr.course);

  for (const auto& [pair, courses] : by_pair) {
    const auto [s, t] = pair;
    ctx.cat.beta[pair] =
        ctx.model.add_var("beta[" + inst.students[s].id + "," + inst.students[t].id + "]");
    ctx.cat.alpha[pair] =
        ctx.model.add_var("alpha[" + inst.students[s].id + "," + inst.students[t].id + "]");
  }
  for (const auto& [pair, courses] : by_pair) {
    const auto [s, t] = pair;
    LinExpr counts;
    for (int c : inst.students[s].eligible) counts.add(1, ctx.cat.course_part.at({s, c}));
    for (int c : inst.students[t].eligible) counts.add(-1, ctx.cat.course_part.at({t, c}));
    ctx.model.add_reified(ctx.cat.beta[pair], std::move(counts), Rel::Le, -1);
    for (int c : courses) {
      LinExpr e;
      e.add(1, ctx.cat.course_part.at({t, c}));
      e.add(-1, ctx.cat.course_part.at({s, c}));
      e.add(1, ctx.cat.beta[pair]);
      e.add(-1, ctx.cat.alpha[pair]);
      ctx.model.add_linear(std::move(e), Rel::Le, 1);
    }
  }
}

// Redundant per-student cap on assignment variables. Implied by the single-
// assignment and course-count families, but it gives the search a tight
// groupwise objective bound. The exhaustive suites verify it never changes
// the satisfying set.
inline void encode_assignment_caps(EncodeContext& ctx) {
  const Instance& inst = ctx.inst;
  for (size_t s = 0; s < inst.students.size(); ++s) {
    LinExpr e;
    for (int c : inst.students[s].eligible)
      for (int i : ctx.instructors_of[c]) e.add(1, ctx.cat.assign.at({c, i, static_cast<int>(s)}));
    if (static_cast<int>(e.terms.size()) > inst.students[s].max_courses)
      ctx.model.add_linear(std::move(e), Rel::Le, inst.students[s].max_courses);
  }
}

}  // namespace detail

inline BuiltModel build(const Instance& inst, const EncodeOptions& opts = {}) {
  for (const Student& s : inst.students)
    if (static_cast<int>(s.eligible.size()) < s.min_courses)
      throw EmptyEligibilityError("student " + s.id + " is eligible for " +
                                  std::to_string(s.eligible.size()) + " courses but requires at least " +
                                  std::to_string(s.min_courses));

  BuiltModel built;
  detail::EncodeContext ctx(inst, opts, built.catalog, built.model);
  detail::create_variables(ctx);
  detail::encode_time_exclusivity(ctx);
  detail::encode_numeric_bounds(ctx);
  detail::encode_lecture_frequency(ctx);
  detail::encode_single_assignment(ctx);
  detail::encode_unit_coupling(ctx);
  detail::encode_daily_and_room_limits(ctx);
  detail::encode_consistency(ctx);
  if (opts.mode == EncodeOptions::Mode::Fhssp) detail::encode_envy(ctx);
  detail::encode_assignment_caps(ctx);

  if (opts.mode == EncodeOptions::Mode::Hssp)
    built.model.set_objective(Sense::Maximize, built.catalog.assignment_sum());
  else
    built.model.set_objective(Sense::Minimize, built.catalog.envy_sum());
  return built;
}

// Purely syntactic read-back of a solver assignment; feasibility is the
// validator's business.
inline Schedule decode(const Instance& inst, const VarCatalog& catalog,
                       std::span<const uint8_t> assignment) {
  Schedule sched;
  for (const auto& [key, v] : catalog.lecture)
    if (assignment[v]) sched.lectures.push_back({key.first, key.second});
  for (const auto& [key, v] : catalog.assign)
    if (assignment[v]) {
      const auto [c, i, s] = key;
      sched.assignments.push_back({{c, i}, s});
    }
  for (const auto& [key, v] : catalog.unit)
    if (assignment[v]) {
      const auto [c, i, r, t] = key;
      sched.units.push_back({{c, i}, r, {t / inst.periods, t % inst.periods}});
    }
  sched.canonicalize();
  return sched;
}

inline long long objective_of(const Instance& inst, const Schedule& sched, EncodeOptions::Mode mode) {
  if (mode == EncodeOptions::Mode::Hssp) return static_cast<long long>(sched.assignments.size());
  return audit_envy(inst, sched).count();
}

}  // namespace fairsched
