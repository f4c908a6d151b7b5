#include <catch2/catch_amalgamated.hpp>

#include "fairsched/core.hpp"
#include "test_support.hpp"

using namespace fairsched;

TEST_CASE("compute_priority averages prerequisite grades", "[core][priority]") {
  Instance inst;
  inst.periods = 1;
  inst.courses = {{"pre1", 1, {}}, {"pre2", 1, {}}, {"adv", 1, {0, 1}}, {"solo", 1, {1}}};
  inst.instructors = {{"i0", {0, 1, 2, 3}, 0, 4}};
  inst.rooms = {{"r0", {0, 1, 2, 3}, 0, 9}};
  Student s;
  s.id = "s0";
  s.eligible = {0, 1, 2, 3};
  s.max_courses = 4;
  s.interest = {0.2, 0.2, 0.2, 0.4};
  s.grades = {{0, 3.0}, {1, 4.0}};
  inst.students = {s};

  SECTION("mean of two grades") { REQUIRE(compute_priority(inst, 0, 2) == 3.5); }
  SECTION("single prerequisite passes the grade through") {
    inst.students[0].grades[1] = 2.7;
    REQUIRE(compute_priority(inst, 0, 3) == 2.7);
  }
  SECTION("no prerequisites falls back to the degree of interest") {
    inst.students[0].interest[0] = 0.4;
    REQUIRE(compute_priority(inst, 0, 0) == 0.4);
  }
  SECTION("missing grade") {
    inst.students[0].grades.erase(1);
    REQUIRE_THROWS_AS(compute_priority(inst, 0, 2), MissingGradeError);
  }
  SECTION("not eligible") {
    inst.students[0].eligible = {0, 1};
    REQUIRE_THROWS_AS(compute_priority(inst, 0, 2), NotEligibleError);
  }
  SECTION("raising a prerequisite grade strictly raises the priority") {
    const double before = compute_priority(inst, 0, 2);
    inst.students[0].grades[0] += 0.5;
    REQUIRE(compute_priority(inst, 0, 2) > before);
  }
}

TEST_CASE("normalize_interest divides by the sum", "[core][interest]") {
  SECTION("three values") {
    const auto d = normalize_interest({1.0, 0.5, 0.5});
    REQUIRE(d[0] == 0.5);
    REQUIRE(d[1] == 0.25);
    REQUIRE(d[2] == 0.25);
  }
  SECTION("singleton is identity") { REQUIRE(normalize_interest({1.0})[0] == 1.0); }
  SECTION("symmetric values split evenly") {
    const auto d = normalize_interest({0.3, 0.3});
    REQUIRE(d[0] == 0.5);
    REQUIRE(d[1] == 0.5);
  }
  SECTION("all-zero input") { REQUIRE_THROWS_AS(normalize_interest({0.0, 0.0}), AllZeroInterestError); }
  SECTION("sums to one and preserves order on random input") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> raw(fstest::irand(rng, 1, 10));
      for (double& v : raw) v = fstest::urand(rng) * 3.0;
      raw[0] += 1e-3;  // guarantee a positive sum
      const auto d = normalize_interest(raw);
      double sum = 0.0;
      for (double v : d) sum += v;
      REQUIRE(std::abs(sum - 1.0) <= 1e-9);
      for (size_t a = 0; a < raw.size(); ++a)
        for (size_t b = 0; b < raw.size(); ++b)
          if (raw[a] > raw[b]) REQUIRE(d[a] > d[b]);
    }
  }
}

namespace {

// two students over one course with explicit priority/interest orderings
Instance pair_instance(double p0, double p1, double d0, double d1) {
  Instance inst;
  inst.periods = 1;
  inst.courses = {{"pre", 1, {}}, {"c", 1, {0}}};
  inst.instructors = {{"i0", {0, 1}, 0, 2}};
  inst.rooms = {{"r0", {0, 1}, 0, 9}};
  for (int k = 0; k < 2; ++k) {
    Student s;
    s.id = "s" + std::to_string(k);
    s.eligible = {0, 1};
    s.max_courses = 2;
    s.interest = {1.0 - (k == 0 ? d0 : d1), k == 0 ? d0 : d1};
    s.grades = {{0, k == 0 ? p0 : p1}};
    inst.students.push_back(std::move(s));
  }
  return inst;
}

}  // namespace

TEST_CASE("envy_eligible_triples requires strict dominance on both scales", "[core][envy]") {
  SECTION("both strict inequalities hold") {
    const auto triples = envy_eligible_triples(pair_instance(0.9, 0.7, 0.4, 0.2));
    REQUIRE(std::count(triples.begin(), triples.end(), EnvyTriple{0, 1, 1}) == 1);
  }
  SECTION("equal priorities exclude the triple") {
    const auto triples = envy_eligible_triples(pair_instance(0.7, 0.7, 0.4, 0.2));
    REQUIRE(std::count(triples.begin(), triples.end(), EnvyTriple{0, 1, 1}) == 0);
  }
  SECTION("opposed priority and interest exclude the triple") {
    const auto triples = envy_eligible_triples(pair_instance(0.9, 0.7, 0.2, 0.4));
    REQUIRE(std::count(triples.begin(), triples.end(), EnvyTriple{0, 1, 1}) == 0);
  }
  SECTION("a fixed witness course is never envy-eligible in both directions") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const auto inst = fstest::random_tiny_instance(1000 + trial);
      const auto triples = envy_eligible_triples(inst);
      for (const EnvyTriple& t : triples)
        REQUIRE(std::count(triples.begin(), triples.end(), EnvyTriple{t.envied, t.envious, t.course}) == 0);
    }
  }
}

TEST_CASE("is_envious checks the schedule-dependent conditions", "[core][envy]") {
  const Instance inst = pair_instance(0.9, 0.7, 0.4, 0.2);  // (s0, s1, c1) eligible

  Schedule sched;
  sched.lectures = {{0, 0}, {1, 0}};
  sched.assignments = {{{1, 0}, 1}};  // s1 holds c1, s0 holds nothing
  sched.canonicalize();

  SECTION("all four conditions hold") {
    const auto w = envy_witness(inst, sched, 0, 1);
    REQUIRE(w.has_value());
    REQUIRE(*w == 1);
    REQUIRE(is_envious(inst, sched, 0, 1));
  }
  SECTION("equal course counts kill condition (iv)") {
    sched.assignments.push_back({{0, 0}, 0});  // s0 now holds one course too
    sched.canonicalize();
    REQUIRE_FALSE(is_envious(inst, sched, 0, 1));
  }
  SECTION("holding the witness course kills condition (i)") {
    sched.assignments.push_back({{1, 0}, 0});
    sched.assignments.push_back({{0, 0}, 1});  // keep s1 ahead on count
    sched.canonicalize();
    REQUIRE_FALSE(is_envious(inst, sched, 0, 1));
  }
  SECTION("unknown student") { REQUIRE_THROWS_AS(is_envious(inst, sched, 0, 5), UnknownStudentError); }
}

TEST_CASE("audit_envy counts ordered pairs once", "[core][envy]") {
  SECTION("hand-built contested seat gives exactly one pair") {
    const Instance inst = pair_instance(0.9, 0.7, 0.4, 0.2);
    Schedule sched;
    sched.lectures = {{1, 0}};
    sched.assignments = {{{1, 0}, 1}};
    sched.canonicalize();
    const EnvyReport report = audit_envy(inst, sched);
    REQUIRE(report.count() == 1);
    REQUIRE(report.pairs[0] == EnvyPair{0, 1, 1});
  }
  SECTION("empty schedule has no envy on any instance") {
    for (int trial = 0; trial < 30; ++trial) {
      const auto inst = fstest::random_tiny_instance(2000 + trial);
      REQUIRE(audit_envy(inst, Schedule{}).count() == 0);
    }
  }
  SECTION("count equals a direct pair enumeration oracle") {
    for (int trial = 0; trial < 30; ++trial) {
      const auto inst = fstest::random_tiny_instance(3000 + trial);
      // random schedule over assignments only (envy ignores rooms and slots)
      std::mt19937_64 rng(500 + trial);
      Schedule sched;
      for (size_t s = 0; s < inst.students.size(); ++s)
        for (int c : inst.students[s].eligible)
          if (fstest::urand(rng) < 0.5 && !inst.instructors.empty() &&
              inst.instructor_eligible(0, c))
            sched.assignments.push_back({{c, 0}, static_cast<int>(s)});
      for (const Assignment& a : sched.assignments) sched.lectures.push_back(a.lecture);
      sched.canonicalize();

      int expected = 0;
      for (size_t s = 0; s < inst.students.size(); ++s)
        for (size_t t = 0; t < inst.students.size(); ++t)
          if (s != t && is_envious(inst, sched, static_cast<int>(s), static_cast<int>(t))) ++expected;
      REQUIRE(audit_envy(inst, sched).count() == expected);
    }
  }
  SECTION("permuting rooms and slots never changes the report") {
    const Instance inst = fstest::contested_seat_instance();
    Schedule sched;
    sched.lectures = {{0, 0}, {1, 0}};
    sched.assignments = {{{0, 0}, 1}, {{1, 0}, 1}};
    sched.units = {{{0, 0}, 0, {0, 0}}, {{1, 0}, 0, {1, 0}}};
    sched.canonicalize();
    const auto before = audit_envy(inst, sched);
    Schedule moved = sched;
    moved.units = {{{0, 0}, 0, {1, 0}}, {{1, 0}, 0, {0, 0}}};
    moved.canonicalize();
    const auto after = audit_envy(inst, moved);
    REQUIRE(before.pairs == after.pairs);
  }
}

TEST_CASE("instance check catches structural problems", "[core][instance]") {
  Instance inst = fstest::unit_instance();
  REQUIRE(inst.check().empty());

  SECTION("duplicate ids") {
    inst.courses.push_back({"alg", 1, {}});
    REQUIRE_FALSE(inst.check().empty());
  }
  SECTION("interest must sum to one") {
    inst.students[0].interest = {0.3};
    REQUIRE_FALSE(inst.check().empty());
  }
  SECTION("frequency above the weekday count breaks the once-per-day rule") {
    inst.courses[0].frequency = 2;  // one weekday only
    REQUIRE_FALSE(inst.check().empty());
  }
  SECTION("unit demand above room-slot supply is a warning, not an error") {
    inst.courses[0].frequency = 1;
    inst.courses.push_back({"extra", 1, {}});
    inst.instructors[0].eligible = {0, 1};
    inst.students[0].interest = {1.0, 0.0};
    REQUIRE(inst.check().empty());
    REQUIRE_FALSE(inst.warnings().empty());
  }
}
