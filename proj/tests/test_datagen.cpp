#include <catch2/catch_amalgamated.hpp>

#include "fairsched/datagen.hpp"
#include "fairsched/io.hpp"
#include "test_support.hpp"

using namespace fairsched;

namespace {

GenSpec small_spec(uint64_t seed) {
  GenSpec spec;
  spec.seed = seed;
  spec.students = 20;
  spec.courses = 10;
  spec.instructors = 5;
  spec.rooms = 10;
  spec.periods = 4;
  spec.days = 5;
  spec.min_courses_per_student = 3;
  spec.max_courses_per_student = 4;
  spec.lecture_frequency = 2;
  return spec;
}

}  // namespace

TEST_CASE("generate reproduces the reference parameter table", "[datagen]") {
  GenSpec spec;
  spec.seed = 1;
  spec.students = 295;
  spec.courses = 121;
  spec.instructors = 72;
  spec.rooms = 106;
  spec.periods = 6;
  const Instance inst = generate(spec);
  REQUIRE(inst.students.size() == 295);
  REQUIRE(inst.courses.size() == 121);
  REQUIRE(inst.instructors.size() == 72);
  REQUIRE(inst.rooms.size() == 106);
  REQUIRE(inst.periods == 6);
  REQUIRE(inst.weekdays == 5);
  for (const Student& s : inst.students) {
    REQUIRE(s.min_courses == 5);
    REQUIRE(s.max_courses == 6);
  }
  for (const Instructor& i : inst.instructors) {
    REQUIRE(i.min_units == 0);
    REQUIRE(i.eligible.size() <= 4);
    // weekly unit budget is frequency times eligible course count
    REQUIRE(i.max_units == 4 * static_cast<int>(i.eligible.size()));
  }
  REQUIRE(inst.check().empty());
}

TEST_CASE("an instructor eligible for four courses gets sixteen units", "[datagen]") {
  GenSpec spec = small_spec(3);
  spec.courses = 8;
  spec.instructors = 2;  // coverage forces four courses each
  spec.lecture_frequency = 4;
  const Instance inst = generate(spec);
  for (const Instructor& i : inst.instructors) {
    REQUIRE(i.eligible.size() == 4);
    REQUIRE(i.max_units == 16);
  }
}

TEST_CASE("generation is a pure function of the spec", "[datagen][determinism]") {
  const Instance a = generate(small_spec(99));
  const Instance b = generate(small_spec(99));
  REQUIRE(save_instance(a) == save_instance(b));
  const Instance c = generate(small_spec(100));
  REQUIRE(save_instance(a) != save_instance(c));
}

TEST_CASE("generated instances are internally consistent", "[datagen]") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = generate(small_spec(seed));
    REQUIRE(inst.check().empty());

    // coverage: every course teachable and hostable, every student filled
    std::vector<int> instructor_courses(inst.courses.size(), 0), room_courses(inst.courses.size(), 0);
    for (const Instructor& i : inst.instructors)
      for (int c : i.eligible) ++instructor_courses[c];
    for (const Room& r : inst.rooms)
      for (int c : r.eligible) ++room_courses[c];
    for (size_t c = 0; c < inst.courses.size(); ++c) {
      REQUIRE(instructor_courses[c] >= 1);
      REQUIRE(room_courses[c] >= 1);
    }
    for (const Student& s : inst.students)
      REQUIRE(static_cast<int>(s.eligible.size()) >= s.max_courses);

    // interest: sums to one and uses at most six decimal places
    for (const Student& s : inst.students) {
      double sum = 0.0;
      for (double d : s.interest) {
        sum += d;
        const double scaled = d * 1e6;
        REQUIRE(std::abs(scaled - std::llround(scaled)) < 1e-6);
      }
      REQUIRE(std::abs(sum - 1.0) <= 1e-9);
    }

    // grades exist wherever a priority needs them
    for (size_t s = 0; s < inst.students.size(); ++s)
      for (int c : inst.students[s].eligible)
        REQUIRE_NOTHROW(compute_priority(inst, static_cast<int>(s), c));
  }
}

TEST_CASE("scarce rooms share courses round-robin", "[datagen]") {
  GenSpec spec = small_spec(5);
  spec.courses = 10;
  spec.rooms = 4;
  const Instance inst = generate(spec);
  std::vector<int> hosts(inst.courses.size(), 0);
  for (const Room& r : inst.rooms)
    for (int c : r.eligible) ++hosts[c];
  for (int h : hosts) REQUIRE(h == 1);  // still exactly one room per course
}

TEST_CASE("impossible specs are rejected", "[datagen]") {
  SECTION("course minimum above the course count") {
    GenSpec spec = small_spec(0);
    spec.min_courses_per_student = 11;
    spec.max_courses_per_student = 12;
    REQUIRE_THROWS_AS(generate(spec), InfeasibleSpecError);
  }
  SECTION("instructors cannot cover the courses") {
    GenSpec spec = small_spec(0);
    spec.instructors = 2;
    spec.max_courses_per_instructor = 2;  // 4 < 10 courses
    REQUIRE_THROWS_AS(generate(spec), InfeasibleSpecError);
  }
  SECTION("frequency above the weekday count") {
    GenSpec spec = small_spec(0);
    spec.lecture_frequency = 6;
    REQUIRE_THROWS_AS(generate(spec), InfeasibleSpecError);
  }
}

TEST_CASE("split_subsets balances group sizes", "[datagen][split]") {
  GenSpec spec = small_spec(17);
  spec.students = 295;
  const Instance inst = generate(spec);

  SECTION("295 students into 6 nearly equal groups") {
    const auto parts = split_subsets(inst, 6);
    REQUIRE(parts.size() == 6);
    size_t total = 0;
    size_t smallest = inst.students.size(), largest = 0;
    for (const Instance& p : parts) {
      total += p.students.size();
      smallest = std::min(smallest, p.students.size());
      largest = std::max(largest, p.students.size());
      REQUIRE(p.courses.size() == inst.courses.size());
      REQUIRE(p.instructors.size() == inst.instructors.size());
      REQUIRE(p.rooms.size() == inst.rooms.size());
      REQUIRE(p.check().empty());
    }
    REQUIRE(total == inst.students.size());
    REQUIRE(largest - smallest <= 1);
  }
  SECTION("k = 1 is the identity") {
    const auto parts = split_subsets(inst, 1);
    REQUIRE(parts.size() == 1);
    REQUIRE(save_instance(parts[0]) == save_instance(inst));
  }
  SECTION("k = |S| gives singleton groups") {
    GenSpec tiny = small_spec(2);
    tiny.students = 7;
    tiny.min_courses_per_student = 2;
    const Instance small = generate(tiny);
    const auto parts = split_subsets(small, 7);
    REQUIRE(parts.size() == 7);
    for (const Instance& p : parts) REQUIRE(p.students.size() == 1);
  }
}

TEST_CASE("request overrides pin choices and grades", "[datagen][ingest]") {
  RequestOverride over;
  over.student_ids = {"alice", "bob"};
  over.course_ids = {"math", "art", "bio", "chem"};
  over.first_choices = {{0}, {1}};
  over.second_choices = {{1}, {2}};
  over.grades = {{}, {}};

  GenSpec spec;
  spec.seed = 4;
  spec.students = 2;
  spec.courses = 4;
  spec.instructors = 2;
  spec.rooms = 4;
  spec.periods = 2;
  spec.days = 5;
  spec.min_courses_per_student = 1;
  spec.max_courses_per_student = 2;
  spec.lecture_frequency = 2;
  spec.prerequisite_density = 0.0;

  const Instance inst = generate_with_requests(spec, over);
  REQUIRE(inst.students[0].id == "alice");
  REQUIRE(inst.courses[0].id == "math");
  // first choice dominates second choice dominates noise, after normalization
  const auto& d = inst.students[0].interest;
  REQUIRE(d[0] > d[1]);
  REQUIRE(d[1] > d[2]);
  REQUIRE(d[1] > d[3]);
  // raw 1.0 vs 0.5 keeps a factor of two between the choices
  REQUIRE(d[0] == Catch::Approx(2.0 * d[1]).margin(2e-6));
}
