#pragma once

// Domain model for weekly school timetabling: courses, instructors, students,
// rooms, candidate schedules, and the preference/envy semantics used by the
// fair variant of the problem. Everything here is plain data plus pure
// functions; nothing depends on the IP encoding.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairsched/errors.hpp"

namespace fairsched {

struct TimeSlot {
  int day = 0;     // 0 .. weekdays-1
  int period = 0;  // 0 .. periods-1
  auto operator<=>(const TimeSlot&) const = default;
};

// A lecture is a (course, instructor) pair; students enroll in lectures.
struct Lecture {
  int course = -1;
  int instructor = -1;
  auto operator<=>(const Lecture&) const = default;
};

// A unit is one scheduled meeting of a lecture in a room at a time slot.
struct Unit {
  Lecture lecture;
  int room = -1;
  TimeSlot slot;
  auto operator<=>(const Unit&) const = default;
};

struct Assignment {
  Lecture lecture;
  int student = -1;
  auto operator<=>(const Assignment&) const = default;
};

struct Course {
  std::string id;
  int frequency = 1;               // required units per week for each lecture of this course
  std::vector<int> prerequisites;  // course indices, sorted
};

struct Instructor {
  std::string id;
  std::vector<int> eligible;  // course indices the instructor may teach, sorted
  int min_units = 0;
  int max_units = 0;
};

struct Student {
  std::string id;
  std::vector<int> eligible;  // course indices the student may take, sorted
  int min_courses = 0;
  int max_courses = 0;
  std::vector<double> interest;   // degree of interest per course, dense over all courses
  std::map<int, double> grades;   // course index -> grade, present only where taken
};

struct Room {
  std::string id;
  std::vector<int> eligible;  // course indices the room can host, sorted
  int min_capacity = 0;
  int max_capacity = 0;
};

namespace detail {
inline bool contains(const std::vector<int>& sorted_or_not, int value) {
  return std::find(sorted_or_not.begin(), sorted_or_not.end(), value) != sorted_or_not.end();
}
}  // namespace detail

// Full problem input. Entity references are dense indices into the vectors
// below; the string ids only matter for serialization and reporting.
struct Instance {
  int weekdays = 5;
  int periods = 1;
  std::vector<Course> courses;
  std::vector<Instructor> instructors;
  std::vector<Student> students;
  std::vector<Room> rooms;

  int slot_count() const { return weekdays * periods; }
  int slot_index(TimeSlot t) const { return t.day * periods + t.period; }

  bool valid_slot(TimeSlot t) const {
    return t.day >= 0 && t.day < weekdays && t.period >= 0 && t.period < periods;
  }

  int course_index(std::string_view id) const { return index_of(courses, id); }
  int instructor_index(std::string_view id) const { return index_of(instructors, id); }
  int student_index(std::string_view id) const { return index_of(students, id); }
  int room_index(std::string_view id) const { return index_of(rooms, id); }

  bool instructor_eligible(int i, int c) const { return detail::contains(instructors[i].eligible, c); }
  bool student_eligible(int s, int c) const { return detail::contains(students[s].eligible, c); }
  bool room_eligible(int r, int c) const { return detail::contains(rooms[r].eligible, c); }

  // Hard invariant violations (referential integrity, bound ordering, ...).
  std::vector<std::string> check() const;
  // Non-fatal observations, e.g. total demanded units exceeding room-slot supply.
  std::vector<std::string> warnings() const;

 private:
  template <typename T>
  static int index_of(const std::vector<T>& xs, std::string_view id) {
    for (size_t k = 0; k < xs.size(); ++k)
      if (xs[k].id == id) return static_cast<int>(k);
    return -1;
  }
};

// Candidate solution triple: lectures L, assignments A, units U. Stored as
// sorted duplicate-free vectors; call canonicalize() after bulk edits.
struct Schedule {
  std::vector<Lecture> lectures;
  std::vector<Assignment> assignments;
  std::vector<Unit> units;

  void canonicalize() {
    auto dedup = [](auto& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(lectures);
    dedup(assignments);
    dedup(units);
  }

  bool has_lecture(Lecture l) const {
    return std::binary_search(lectures.begin(), lectures.end(), l);
  }
};

inline std::vector<std::string> Instance::check() const {
  std::vector<std::string> problems;
  auto bad = [&](const std::string& m) { problems.push_back(m); };

  if (periods < 1) bad("periods must be >= 1");
  if (weekdays < 1) bad("weekdays must be >= 1");

  auto check_ids = [&](const auto& xs, const char* kind) {
    for (size_t a = 0; a < xs.size(); ++a) {
      if (xs[a].id.empty()) bad(std::string(kind) + " with empty id");
      for (size_t b = a + 1; b < xs.size(); ++b)
        if (xs[a].id == xs[b].id) bad(std::string(kind) + " id duplicated: " + xs[a].id);
    }
  };
  check_ids(courses, "course");
  check_ids(instructors, "instructor");
  check_ids(students, "student");
  check_ids(rooms, "room");

  const int nc = static_cast<int>(courses.size());
  auto check_courses = [&](const std::vector<int>& cs, const std::string& owner) {
    for (int c : cs)
      if (c < 0 || c >= nc) bad(owner + " references unknown course index " + std::to_string(c));
  };
  for (const auto& c : courses) {
    check_courses(c.prerequisites, "course " + c.id);
    if (c.frequency < 1) bad("course " + c.id + " frequency must be >= 1");
    if (c.frequency > weekdays)
      bad("course " + c.id + " frequency exceeds weekday count (once-per-day rule)");
  }
  for (const auto& i : instructors) {
    check_courses(i.eligible, "instructor " + i.id);
    if (i.min_units < 0 || i.min_units > i.max_units) bad("instructor " + i.id + " has invalid unit range");
  }
  for (const auto& s : students) {
    check_courses(s.eligible, "student " + s.id);
    if (s.min_courses < 0 || s.min_courses > s.max_courses) bad("student " + s.id + " has invalid course range");
    if (!s.interest.empty() && static_cast<int>(s.interest.size()) != nc)
      bad("student " + s.id + " interest vector has wrong length");
    for (const auto& [c, g] : s.grades)
      if (c < 0 || c >= nc) bad("student " + s.id + " grade references unknown course");
    double sum = 0.0;
    bool negative = false;
    for (double d : s.interest) {
      sum += d;
      if (d < 0.0 || d > 1.0) negative = true;
    }
    if (negative) bad("student " + s.id + " has interest outside [0,1]");
    if (!s.interest.empty() && std::abs(sum - 1.0) > 1e-9)
      bad("student " + s.id + " interest does not sum to 1");
  }
  for (const auto& r : rooms) {
    check_courses(r.eligible, "room " + r.id);
    if (r.min_capacity < 0 || r.min_capacity > r.max_capacity) bad("room " + r.id + " has invalid capacity range");
  }
  return problems;
}

inline std::vector<std::string> Instance::warnings() const {
  std::vector<std::string> notes;
  long long demanded = 0;
  for (const auto& c : courses) demanded += c.frequency;
  const long long supply = static_cast<long long>(rooms.size()) * slot_count();
  if (demanded > supply)
    notes.push_back("total weekly units per single lecture of every course (" + std::to_string(demanded) +
                    ") exceed room-slot supply (" + std::to_string(supply) + ")");
  return notes;
}

// ---------------------------------------------------------------------------
// Preferences and priority

// Divides each entry by the total. Order of magnitudes is preserved; the
// result sums to 1 up to rounding.
inline std::vector<double> normalize_interest(std::vector<double> raw) {
  double sum = 0.0;
  for (double v : raw) sum += v;
  if (sum <= 0.0) throw AllZeroInterestError("cannot normalize an all-zero interest vector");
  for (double& v : raw) v /= sum;
  return raw;
}

// Priority of student s for course c: mean grade over the course's
// prerequisites when it has any, otherwise the student's degree of interest.
inline double compute_priority(const Instance& inst, int student, int course) {
  if (student < 0 || student >= static_cast<int>(inst.students.size()))
    throw UnknownStudentError("unknown student index " + std::to_string(student));
  const Student& s = inst.students[student];
  if (!inst.student_eligible(student, course))
    throw NotEligibleError("student " + s.id + " is not eligible for course " + inst.courses[course].id);
  const Course& c = inst.courses[course];
  if (c.prerequisites.empty()) return s.interest.empty() ? 0.0 : s.interest[course];
  double total = 0.0;
  for (int p : c.prerequisites) {
    auto it = s.grades.find(p);
    if (it == s.grades.end())
      throw MissingGradeError("student " + s.id + " has no grade for prerequisite " + inst.courses[p].id +
                              " of course " + c.id);
    total += it->second;
  }
  return total / static_cast<double>(c.prerequisites.size());
}

// Priority table for all (student, course) pairs; NaN marks pairs where the
// student is not eligible (priority is undefined there).
inline std::vector<std::vector<double>> compute_priorities(const Instance& inst) {
  std::vector<std::vector<double>> p(inst.students.size(),
                                     std::vector<double>(inst.courses.size(), std::nan("")));
  for (size_t s = 0; s < inst.students.size(); ++s)
    for (int c : inst.students[s].eligible) p[s][c] = compute_priority(inst, static_cast<int>(s), c);
  return p;
}

// ---------------------------------------------------------------------------
// Envy

// Schedule-independent part of the envy definition: ordered (s, s', c) with
// both students eligible for c and s strictly dominating s' on both priority
// and interest. Ties on either quantity exclude the triple.
struct EnvyTriple {
  int envious = -1;
  int envied = -1;
  int course = -1;
  auto operator<=>(const EnvyTriple&) const = default;
};

inline std::vector<EnvyTriple> envy_eligible_triples(const Instance& inst) {
  std::vector<EnvyTriple> triples;
  const auto p = compute_priorities(inst);
  const int ns = static_cast<int>(inst.students.size());
  for (int s = 0; s < ns; ++s) {
    for (int t = 0; t < ns; ++t) {
      if (s == t) continue;
      for (int c : inst.students[s].eligible) {
        if (!inst.student_eligible(t, c)) continue;
        const double ds = inst.students[s].interest.empty() ? 0.0 : inst.students[s].interest[c];
        const double dt = inst.students[t].interest.empty() ? 0.0 : inst.students[t].interest[c];
        if (p[s][c] > p[t][c] && ds > dt) triples.push_back({s, t, c});
      }
    }
  }
  return triples;
}

// Courses assigned to each student (C_s), sorted and distinct. Entries with
// out-of-range indices are ignored; the validator reports those separately.
inline std::vector<std::vector<int>> assigned_courses(const Instance& inst, const Schedule& sched) {
  std::vector<std::vector<int>> by_student(inst.students.size());
  for (const Assignment& a : sched.assignments) {
    if (a.student < 0 || a.student >= static_cast<int>(inst.students.size())) continue;
    if (a.lecture.course < 0 || a.lecture.course >= static_cast<int>(inst.courses.size())) continue;
    by_student[a.student].push_back(a.lecture.course);
  }
  for (auto& cs : by_student) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  }
  return by_student;
}

// Returns the witness course when student s envies student t under the given
// schedule: some envy-eligible (s, t, c) with c held by t but not s, and s
// holding strictly fewer courses. Picks the lexicographically smallest
// witness by course id.
inline std::optional<int> envy_witness(const Instance& inst, const Schedule& sched, int s, int t,
                                       const std::vector<EnvyTriple>* triples = nullptr) {
  const int ns = static_cast<int>(inst.students.size());
  if (s < 0 || s >= ns) throw UnknownStudentError("unknown student index " + std::to_string(s));
  if (t < 0 || t >= ns) throw UnknownStudentError("unknown student index " + std::to_string(t));
  if (s == t) return std::nullopt;

  const auto by_student = assigned_courses(inst, sched);
  const auto& cs = by_student[s];
  const auto& ct = by_student[t];
  if (cs.size() >= ct.size()) return std::nullopt;

  std::vector<EnvyTriple> local;
  if (triples == nullptr) {
    local = envy_eligible_triples(inst);
    triples = &local;
  }
  std::optional<int> best;
  for (const EnvyTriple& tr : *triples) {
    if (tr.envious != s || tr.envied != t) continue;
    const int c = tr.course;
    if (!std::binary_search(ct.begin(), ct.end(), c)) continue;
    if (std::binary_search(cs.begin(), cs.end(), c)) continue;
    if (!best || inst.courses[c].id < inst.courses[*best].id) best = c;
  }
  return best;
}

inline bool is_envious(const Instance& inst, const Schedule& sched, int s, int t) {
  return envy_witness(inst, sched, s, t).has_value();
}

struct EnvyPair {
  int envious = -1;
  int envied = -1;
  int witness = -1;  // smallest witness course by id
  auto operator<=>(const EnvyPair&) const = default;
};

// One entry per ordered envious pair, regardless of how many witness courses
// exist for it.
struct EnvyReport {
  std::vector<EnvyPair> pairs;
  int count() const { return static_cast<int>(pairs.size()); }
};

inline EnvyReport audit_envy(const Instance& inst, const Schedule& sched,
                             const std::vector<EnvyTriple>* triples = nullptr) {
  std::vector<EnvyTriple> local;
  if (triples == nullptr) {
    local = envy_eligible_triples(inst);
    triples = &local;
  }
  const auto by_student = assigned_courses(inst, sched);
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (const EnvyTriple& tr : *triples) by_pair[{tr.envious, tr.envied}].push_back(tr.course);

  EnvyReport report;
  for (const auto& [pair, candidates] : by_pair) {
    const auto& cs = by_student[pair.first];
    const auto& ct = by_student[pair.second];
    if (cs.size() >= ct.size()) continue;
    std::optional<int> best;
    for (int c : candidates) {
      if (!std::binary_search(ct.begin(), ct.end(), c)) continue;
      if (std::binary_search(cs.begin(), cs.end(), c)) continue;
      if (!best || inst.courses[c].id < inst.courses[*best].id) best = c;
    }
    if (best) report.pairs.push_back({pair.first, pair.second, *best});
  }
  std::sort(report.pairs.begin(), report.pairs.end());
  return report;
}

}  // namespace fairsched
