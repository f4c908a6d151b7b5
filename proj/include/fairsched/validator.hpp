#pragma once

// Independent feasibility checker for candidate schedules. This is the oracle
// the encoder and solver are tested against, so it deliberately shares no
// code with the IP side: everything is computed directly from the schedule
// sets. Violations are collected exhaustively rather than failing fast.

#include <map>
#include <string>
#include <vector>

#include "fairsched/core.hpp"

namespace fairsched {

enum class ViolationKind {
  TimeConflict,
  Eligibility,
  InstructorUnits,
  StudentCourses,
  RoomCapacity,
  LectureFrequency,
  Structural,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::TimeConflict: return "TimeConflict";
    case ViolationKind::Eligibility: return "Eligibility";
    case ViolationKind::InstructorUnits: return "InstructorUnits";
    case ViolationKind::StudentCourses: return "StudentCourses";
    case ViolationKind::RoomCapacity: return "RoomCapacity";
    case ViolationKind::LectureFrequency: return "LectureFrequency";
    case ViolationKind::Structural: return "Structural";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::vector<std::string> subjects;  // ids of the entities involved
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool feasible = true;
};

struct ValidateOptions {
  // The once-per-day rule lives in the encoding, not the base feasibility
  // definition; it is checked here too so validator and encoder agree.
  bool enforce_separate_days = true;
};

namespace detail {

// Shared walk over all checks. When `Collect` is false no Violation objects
// (and in particular no strings) are materialized, only the feasibility bit;
// the exhaustive encoder-agreement tests call this millions of times.
template <bool Collect>
class ScheduleChecker {
 public:
  ScheduleChecker(const Instance& inst, const Schedule& sched, ValidateOptions opts)
      : inst_(inst), sched_(sched), opts_(opts) {}

  bool feasible() const { return feasible_; }
  std::vector<Violation>&& take() { return std::move(violations_); }

  void structural() {
    const int nstud = static_cast<int>(inst_.students.size());
    const int nroom = static_cast<int>(inst_.rooms.size());

    for (const Lecture& l : sched_.lectures)
      if (!lecture_in_range(l))
        flag(ViolationKind::Structural, [&] {
          return Violation{ViolationKind::Structural, {}, "lecture references an unknown course or instructor"};
        });
    for (const Assignment& a : sched_.assignments) {
      if (!lecture_in_range(a.lecture) || a.student < 0 || a.student >= nstud) {
        flag(ViolationKind::Structural, [&] {
          return Violation{ViolationKind::Structural, {}, "assignment references an unknown entity"};
        });
        continue;
      }
      if (!sched_.has_lecture(a.lecture))
        flag(ViolationKind::Structural, [&] {
          return Violation{ViolationKind::Structural,
                           {inst_.students[a.student].id},
                           "assignment of " + inst_.students[a.student].id +
                               " to a lecture not present in the schedule"};
        });
    }
    for (const Unit& u : sched_.units) {
      if (!lecture_in_range(u.lecture) || u.room < 0 || u.room >= nroom || !inst_.valid_slot(u.slot)) {
        flag(ViolationKind::Structural, [&] {
          return Violation{ViolationKind::Structural, {}, "unit references an unknown entity or slot"};
        });
        continue;
      }
      if (!sched_.has_lecture(u.lecture))
        flag(ViolationKind::Structural, [&] {
          return Violation{ViolationKind::Structural,
                           {inst_.rooms[u.room].id},
                           "unit of a lecture not present in the schedule"};
        });
    }

    auto dup = [&](const auto& v, const char* what) {
      for (size_t k = 1; k < v.size(); ++k)
        if (v[k] == v[k - 1])
          flag(ViolationKind::Structural, [&] {
            return Violation{ViolationKind::Structural, {}, std::string("duplicate ") + what + " entry"};
          });
    };
    dup(sched_.lectures, "lecture");
    dup(sched_.assignments, "assignment");
    dup(sched_.units, "unit");

    // one lecture per course per student
    std::map<std::pair<int, int>, int> per_course;
    for (const Assignment& a : sched_.assignments) {
      if (a.student < 0 || a.student >= nstud || !lecture_in_range(a.lecture)) continue;
      if (++per_course[{a.student, a.lecture.course}] == 2)
        flag(ViolationKind::Structural, [&] {
          return Violation{ViolationKind::Structural,
                           {inst_.students[a.student].id, inst_.courses[a.lecture.course].id},
                           "student " + inst_.students[a.student].id +
                               " enrolled in more than one lecture of course " +
                               inst_.courses[a.lecture.course].id};
        });
    }
  }

  void time_conflicts() {
    std::map<std::pair<int, int>, int> per_room, per_instructor, per_student;  // (entity, slot) -> units
    for (const Unit& u : sched_.units) {
      if (!unit_in_range(u)) continue;
      const int t = inst_.slot_index(u.slot);
      ++per_room[{u.room, t}];
      ++per_instructor[{u.lecture.instructor, t}];
    }
    // U_s spans every unit of every lecture the student is enrolled in.
    for (const Assignment& a : sched_.assignments) {
      if (a.student < 0 || a.student >= static_cast<int>(inst_.students.size())) continue;
      for (const Unit& u : sched_.units) {
        if (!unit_in_range(u) || u.lecture != a.lecture) continue;
        ++per_student[{a.student, inst_.slot_index(u.slot)}];
      }
    }
    auto report = [&](const auto& counts, auto id_of) {
      for (const auto& [key, n] : counts)
        if (n >= 2)
          flag(ViolationKind::TimeConflict, [&] {
            return Violation{ViolationKind::TimeConflict,
                             {id_of(key.first)},
                             id_of(key.first) + " has " + std::to_string(n) + " units in slot " +
                                 slot_name(key.second)};
          });
    };
    report(per_room, [&](int r) { return inst_.rooms[r].id; });
    report(per_instructor, [&](int i) { return inst_.instructors[i].id; });
    report(per_student, [&](int s) { return inst_.students[s].id; });
  }

  void eligibility() {
    // C_i from L
    for (const Lecture& l : sched_.lectures) {
      if (!lecture_in_range(l)) continue;
      if (!inst_.instructor_eligible(l.instructor, l.course))
        flag(ViolationKind::Eligibility, [&] {
          return Violation{ViolationKind::Eligibility,
                           {inst_.instructors[l.instructor].id, inst_.courses[l.course].id},
                           "instructor " + inst_.instructors[l.instructor].id + " not eligible to teach " +
                               inst_.courses[l.course].id};
        });
    }
    // C_s from A (one violation per distinct (student, course))
    std::map<std::pair<int, int>, bool> seen_sc;
    for (const Assignment& a : sched_.assignments) {
      if (!lecture_in_range(a.lecture) || a.student < 0 ||
          a.student >= static_cast<int>(inst_.students.size()))
        continue;
      if (seen_sc[{a.student, a.lecture.course}]) continue;
      seen_sc[{a.student, a.lecture.course}] = true;
      if (!inst_.student_eligible(a.student, a.lecture.course))
        flag(ViolationKind::Eligibility, [&] {
          return Violation{ViolationKind::Eligibility,
                           {inst_.students[a.student].id, inst_.courses[a.lecture.course].id},
                           "student " + inst_.students[a.student].id + " not eligible for " +
                               inst_.courses[a.lecture.course].id};
        });
    }
    // C_r from U
    std::map<std::pair<int, int>, bool> seen_rc;
    for (const Unit& u : sched_.units) {
      if (!unit_in_range(u)) continue;
      if (seen_rc[{u.room, u.lecture.course}]) continue;
      seen_rc[{u.room, u.lecture.course}] = true;
      if (!inst_.room_eligible(u.room, u.lecture.course))
        flag(ViolationKind::Eligibility, [&] {
          return Violation{ViolationKind::Eligibility,
                           {inst_.rooms[u.room].id, inst_.courses[u.lecture.course].id},
                           "room " + inst_.rooms[u.room].id + " not eligible to host " +
                               inst_.courses[u.lecture.course].id};
        });
    }
  }

  void numeric_bounds() {
    // instructors: weekly unit count
    std::vector<int> units_of(inst_.instructors.size(), 0);
    for (const Unit& u : sched_.units)
      if (unit_in_range(u)) ++units_of[u.lecture.instructor];
    for (size_t i = 0; i < inst_.instructors.size(); ++i) {
      const Instructor& in = inst_.instructors[i];
      if (units_of[i] < in.min_units || units_of[i] > in.max_units)
        flag(ViolationKind::InstructorUnits, [&] {
          return Violation{ViolationKind::InstructorUnits,
                           {in.id},
                           in.id + " teaches " + std::to_string(units_of[i]) + " units, outside [" +
                               std::to_string(in.min_units) + "," + std::to_string(in.max_units) + "]"};
        });
    }
    // students: semester course count
    const auto by_student = assigned_courses(inst_, sched_);
    for (size_t s = 0; s < inst_.students.size(); ++s) {
      const Student& st = inst_.students[s];
      const int n = static_cast<int>(by_student[s].size());
      if (n < st.min_courses || n > st.max_courses)
        flag(ViolationKind::StudentCourses, [&] {
          return Violation{ViolationKind::StudentCourses,
                           {st.id},
                           st.id + " takes " + std::to_string(n) + " courses, outside [" +
                               std::to_string(st.min_courses) + "," + std::to_string(st.max_courses) + "]"};
        });
    }
    // rooms: attendee count per existing unit
    for (const Unit& u : sched_.units) {
      if (!unit_in_range(u)) continue;
      int attendees = 0;
      for (const Assignment& a : sched_.assignments)
        if (a.lecture == u.lecture) ++attendees;
      const Room& r = inst_.rooms[u.room];
      if (attendees < r.min_capacity || attendees > r.max_capacity)
        flag(ViolationKind::RoomCapacity, [&] {
          return Violation{ViolationKind::RoomCapacity,
                           {r.id, inst_.courses[u.lecture.course].id},
                           "unit of " + inst_.courses[u.lecture.course].id + " in " + r.id + " has " +
                               std::to_string(attendees) + " attendees, outside [" +
                               std::to_string(r.min_capacity) + "," + std::to_string(r.max_capacity) + "]"};
        });
    }
  }

  void lecture_frequency() {
    for (const Lecture& l : sched_.lectures) {
      if (!lecture_in_range(l)) continue;
      int count = 0;
      std::vector<int> per_day(inst_.weekdays, 0);
      for (const Unit& u : sched_.units) {
        if (u.lecture != l || !unit_in_range(u)) continue;
        ++count;
        ++per_day[u.slot.day];
      }
      const int want = inst_.courses[l.course].frequency;
      if (count != want)
        flag(ViolationKind::LectureFrequency, [&] {
          return Violation{ViolationKind::LectureFrequency,
                           {inst_.courses[l.course].id, inst_.instructors[l.instructor].id},
                           "lecture (" + inst_.courses[l.course].id + "," + inst_.instructors[l.instructor].id +
                               ") has " + std::to_string(count) + " units, expected " + std::to_string(want)};
        });
      if (opts_.enforce_separate_days)
        for (int d = 0; d < inst_.weekdays; ++d)
          if (per_day[d] >= 2)
            flag(ViolationKind::LectureFrequency, [&] {
              return Violation{ViolationKind::LectureFrequency,
                               {inst_.courses[l.course].id, inst_.instructors[l.instructor].id},
                               "lecture (" + inst_.courses[l.course].id + "," +
                                   inst_.instructors[l.instructor].id + ") meets more than once on day " +
                                   std::to_string(d)};
            });
    }
  }

  void run_all() {
    structural();
    time_conflicts();
    eligibility();
    numeric_bounds();
    lecture_frequency();
  }

 private:
  bool lecture_in_range(Lecture l) const {
    return l.course >= 0 && l.course < static_cast<int>(inst_.courses.size()) && l.instructor >= 0 &&
           l.instructor < static_cast<int>(inst_.instructors.size());
  }
  bool unit_in_range(const Unit& u) const {
    return lecture_in_range(u.lecture) && u.room >= 0 && u.room < static_cast<int>(inst_.rooms.size()) &&
           inst_.valid_slot(u.slot);
  }
  std::string slot_name(int t) const {
    return "(" + std::to_string(t / inst_.periods) + "," + std::to_string(t % inst_.periods) + ")";
  }

  template <typename MakeViolation>
  void flag(ViolationKind, MakeViolation&& make) {
    feasible_ = false;
    if constexpr (Collect) violations_.push_back(make());
  }

  const Instance& inst_;
  const Schedule& sched_;
  ValidateOptions opts_;
  bool feasible_ = true;
  std::vector<Violation> violations_;
};

}  // namespace detail

inline std::vector<Violation> check_time_conflicts(const Instance& inst, const Schedule& sched) {
  detail::ScheduleChecker<true> ck(inst, sched, {});
  ck.time_conflicts();
  return ck.take();
}

inline std::vector<Violation> check_eligibility(const Instance& inst, const Schedule& sched) {
  detail::ScheduleChecker<true> ck(inst, sched, {});
  ck.eligibility();
  return ck.take();
}

inline std::vector<Violation> check_numeric_bounds(const Instance& inst, const Schedule& sched) {
  detail::ScheduleChecker<true> ck(inst, sched, {});
  ck.numeric_bounds();
  return ck.take();
}

inline std::vector<Violation> check_lecture_frequency(const Instance& inst, const Schedule& sched,
                                                      ValidateOptions opts = {}) {
  detail::ScheduleChecker<true> ck(inst, sched, opts);
  ck.lecture_frequency();
  return ck.take();
}

inline ValidationReport validate(const Instance& inst, const Schedule& sched, ValidateOptions opts = {}) {
  detail::ScheduleChecker<true> ck(inst, sched, opts);
  ck.run_all();
  ValidationReport report;
  report.violations = ck.take();
  report.feasible = report.violations.empty();
  return report;
}

// Feasibility bit only, running the exact same checks as validate().
inline bool validate_feasible(const Instance& inst, const Schedule& sched, ValidateOptions opts = {}) {
  detail::ScheduleChecker<false> ck(inst, sched, opts);
  ck.run_all();
  return ck.feasible();
}

inline std::string render_text(const ValidationReport& report) {
  std::string out;
  out += report.feasible ? "feasible: yes\n" : "feasible: no\n";
  for (const Violation& v : report.violations) out += std::string(to_string(v.kind)) + ": " + v.detail + "\n";
  return out;
}

}  // namespace fairsched
