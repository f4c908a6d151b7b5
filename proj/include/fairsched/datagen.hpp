#pragma once

// Deterministic synthetic instance generator. Rooms are dedicated per course,
// instructors cover every course subject to a per-instructor course cap, and
// student preferences follow the first-choice/second-choice interest scheme
// with truncated-normal noise for unrequested courses.
//
// All randomness flows through a seeded mt19937_64 with hand-rolled
// distributions, so equal specs produce byte-identical instances.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fairsched/core.hpp"

namespace fairsched {

struct GenSpec {
  uint64_t seed = 0;
  int students = 0;
  int courses = 0;
  int instructors = 0;
  int rooms = 0;
  int periods = 6;
  int days = 5;
  int min_courses_per_student = 5;
  int max_courses_per_student = 6;
  int max_courses_per_instructor = 4;
  int lecture_frequency = 4;
  int extra_eligible = 2;           // eligibility fill beyond the course maximum
  double prerequisite_density = 0.3;
  double grade_scale_max = 4.0;
  double interest_noise_mean = 0.25;
  double interest_noise_sd = 0.1;
  double interest_noise_max = 0.5;  // noise truncated to [0, this]
  int first_choices = 1;
  int second_choices = 1;
};

// Fixed course requests used by the ingestion path in place of random ones.
struct RequestOverride {
  std::vector<std::string> student_ids;
  std::vector<std::string> course_ids;
  std::vector<std::vector<int>> first_choices;   // per student, course indices
  std::vector<std::vector<int>> second_choices;  // per student
  std::vector<std::vector<std::pair<int, double>>> grades;  // per student, optional fixed grades
};

namespace detail {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive range
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

inline double normal(std::mt19937_64& rng, double mean, double sd) {
  // Box-Muller; one draw per call keeps the stream position predictable
  double u1 = uniform01(rng);
  if (u1 < 1e-300) u1 = 1e-300;
  const double u2 = uniform01(rng);
  return mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
}

inline double truncated_normal(std::mt19937_64& rng, double mean, double sd, double lo, double hi) {
  for (int tries = 0; tries < 1000; ++tries) {
    const double x = normal(rng, mean, sd);
    if (x >= lo && x <= hi) return x;
  }
  return mean < lo ? lo : (mean > hi ? hi : mean);
}

inline double quantize(double x, double step) { return std::llround(x / step) * step; }

// Quantize a normalized vector to 6 decimals while keeping the sum exactly
// 10^6 units: floor to units, then hand the remaining units to the largest
// fractional parts (ties to the lower index).
inline std::vector<double> quantize_interest(const std::vector<double>& d) {
  const long long scale = 1000000;
  std::vector<long long> units(d.size());
  std::vector<std::pair<double, int>> frac(d.size());
  long long assigned = 0;
  for (size_t k = 0; k < d.size(); ++k) {
    const double scaled = d[k] * static_cast<double>(scale);
    units[k] = static_cast<long long>(scaled);
    frac[k] = {scaled - static_cast<double>(units[k]), static_cast<int>(k)};
    assigned += units[k];
  }
  long long leftover = scale - assigned;
  std::sort(frac.begin(), frac.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (size_t k = 0; leftover > 0 && k < frac.size(); ++k, --leftover) ++units[frac[k].second];
  std::vector<double> out(d.size());
  for (size_t k = 0; k < d.size(); ++k) out[k] = static_cast<double>(units[k]) * 1e-6;
  return out;
}

inline std::string padded_id(char prefix, int index, int count) {
  int width = 2;
  for (int v = count - 1; v >= 100; v /= 10) ++width;
  std::string digits = std::to_string(index);
  return prefix + std::string(width > static_cast<int>(digits.size()) ? width - digits.size() : 0, '0') +
         digits;
}

inline std::vector<int> sample_distinct(std::mt19937_64& rng, int universe, int count,
                                        const std::vector<int>& exclude) {
  std::vector<int> picked;
  std::vector<uint8_t> taken(universe, 0);
  for (int e : exclude) taken[e] = 1;
  int avail = universe - static_cast<int>(exclude.size());
  while (count > 0 && avail > 0) {
    int c = uniform_int(rng, 0, universe - 1);
    while (taken[c]) c = (c + 1) % universe;  // deterministic probe
    taken[c] = 1;
    picked.push_back(c);
    --count;
    --avail;
  }
  return picked;
}

inline Instance generate_impl(const GenSpec& spec, const RequestOverride* req) {
  if (spec.students < 1 || spec.courses < 1 || spec.instructors < 1 || spec.rooms < 1)
    throw InfeasibleSpecError("entity counts must be at least 1");
  if (spec.lecture_frequency < 1 || spec.lecture_frequency > spec.days)
    throw InfeasibleSpecError("lecture frequency must lie in [1, days]");
  if (spec.min_courses_per_student > spec.courses)
    throw InfeasibleSpecError("minimum courses per student exceeds the course count");
  if (spec.min_courses_per_student > spec.max_courses_per_student)
    throw InfeasibleSpecError("course range per student is inverted");
  if (static_cast<long long>(spec.instructors) * spec.max_courses_per_instructor < spec.courses)
    throw InfeasibleSpecError("instructors cannot cover every course under the per-instructor cap");

  std::mt19937_64 rng(spec.seed);
  Instance inst;
  inst.weekdays = spec.days;
  inst.periods = spec.periods;

  const int nc = spec.courses;
  inst.courses.resize(nc);
  for (int c = 0; c < nc; ++c) {
    inst.courses[c].id = req ? req->course_ids[c] : padded_id('c', c, nc);
    inst.courses[c].frequency = spec.lecture_frequency;
  }
  // prerequisite graph, acyclic by construction (prerequisites precede)
  for (int c = 1; c < nc; ++c) {
    if (uniform01(rng) >= spec.prerequisite_density) continue;
    const int count = (c >= 2 && uniform01(rng) < 0.25) ? 2 : 1;
    inst.courses[c].prerequisites = sample_distinct(rng, c, count, {});
    std::sort(inst.courses[c].prerequisites.begin(), inst.courses[c].prerequisites.end());
  }

  // rooms: dedicated room per course (round-robin when rooms are scarce);
  // rooms beyond the course count are general purpose
  inst.rooms.resize(spec.rooms);
  for (int r = 0; r < spec.rooms; ++r) {
    inst.rooms[r].id = padded_id('r', r, spec.rooms);
    inst.rooms[r].min_capacity = 0;
    inst.rooms[r].max_capacity = spec.students;
    if (r >= nc)
      for (int c = 0; c < nc; ++c) inst.rooms[r].eligible.push_back(c);
  }
  for (int c = 0; c < nc; ++c) inst.rooms[c % spec.rooms].eligible.push_back(c);
  for (auto& r : inst.rooms) {
    std::sort(r.eligible.begin(), r.eligible.end());
    r.eligible.erase(std::unique(r.eligible.begin(), r.eligible.end()), r.eligible.end());
  }

  // instructors: round-robin coverage, then random top-up below the cap
  inst.instructors.resize(spec.instructors);
  for (int i = 0; i < spec.instructors; ++i) inst.instructors[i].id = padded_id('i', i, spec.instructors);
  for (int c = 0; c < nc; ++c) inst.instructors[c % spec.instructors].eligible.push_back(c);
  for (int i = 0; i < spec.instructors; ++i) {
    auto& eligible = inst.instructors[i].eligible;
    const int target = uniform_int(rng, 1, spec.max_courses_per_instructor);
    if (static_cast<int>(eligible.size()) < target) {
      auto extra = sample_distinct(rng, nc, target - static_cast<int>(eligible.size()), eligible);
      eligible.insert(eligible.end(), extra.begin(), extra.end());
    }
    std::sort(eligible.begin(), eligible.end());
    inst.instructors[i].min_units = 0;
    inst.instructors[i].max_units = spec.lecture_frequency * static_cast<int>(eligible.size());
  }

  // students: requests, eligibility fill, interest, grades
  const int ns = spec.students;
  inst.students.resize(ns);
  const int max_courses = std::min(spec.max_courses_per_student, nc);
  for (int s = 0; s < ns; ++s) {
    Student& st = inst.students[s];
    st.id = req ? req->student_ids[s] : padded_id('s', s, ns);
    st.min_courses = spec.min_courses_per_student;
    st.max_courses = max_courses;

    std::vector<int> first, second;
    if (req) {
      first = req->first_choices[s];
      second = req->second_choices[s];
    } else {
      first = sample_distinct(rng, nc, std::min(spec.first_choices, nc), {});
      second = sample_distinct(rng, nc, std::min(spec.second_choices, nc - static_cast<int>(first.size())),
                               first);
    }
    st.eligible = first;
    st.eligible.insert(st.eligible.end(), second.begin(), second.end());
    const int fill_to = std::min(nc, max_courses + spec.extra_eligible);
    if (static_cast<int>(st.eligible.size()) < fill_to) {
      auto extra = sample_distinct(rng, nc, fill_to - static_cast<int>(st.eligible.size()), st.eligible);
      st.eligible.insert(st.eligible.end(), extra.begin(), extra.end());
    }
    std::sort(st.eligible.begin(), st.eligible.end());

    std::vector<double> raw(nc, 0.0);
    for (int c = 0; c < nc; ++c)
      raw[c] = truncated_normal(rng, spec.interest_noise_mean, spec.interest_noise_sd, 0.0,
                                spec.interest_noise_max);
    for (int c : first) raw[c] = 1.0;
    for (int c : second) raw[c] = 0.5;
    st.interest = quantize_interest(normalize_interest(std::move(raw)));
  }
  // grades for every prerequisite of every eligible course
  for (int s = 0; s < ns; ++s) {
    Student& st = inst.students[s];
    for (int c : st.eligible)
      for (int p : inst.courses[c].prerequisites)
        if (!st.grades.count(p))
          st.grades[p] = quantize(uniform01(rng) * spec.grade_scale_max, 0.01);
    if (req)
      for (const auto& [course, grade] : req->grades[s]) st.grades[course] = grade;
  }
  return inst;
}

}  // namespace detail

inline Instance generate(const GenSpec& spec) { return detail::generate_impl(spec, nullptr); }

// Ingestion path: identical recipe, but student/course universes and the
// first/second choices come from real request data.
inline Instance generate_with_requests(const GenSpec& spec, const RequestOverride& req) {
  return detail::generate_impl(spec, &req);
}

// Splits the students into k nearly equal groups (sizes differ by at most
// one); every sub-instance keeps the full course/instructor/room universe.
inline std::vector<Instance> split_subsets(const Instance& inst, int k) {
  const int n = static_cast<int>(inst.students.size());
  std::vector<Instance> parts;
  if (k < 1) return parts;
  const int base = n / k;
  const int rem = n % k;
  int at = 0;
  for (int g = 0; g < k; ++g) {
    const int size = base + (g < rem ? 1 : 0);
    Instance sub = inst;
    sub.students.assign(inst.students.begin() + at, inst.students.begin() + at + size);
    at += size;
    parts.push_back(std::move(sub));
  }
  return parts;
}

}  // namespace fairsched
