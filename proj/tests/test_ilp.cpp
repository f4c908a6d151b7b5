#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "fairsched/ilp.hpp"
#include "fairsched/lp_format.hpp"
#include "test_support.hpp"

using namespace fairsched;

namespace {

// every satisfying assignment of a and b agrees, over all 2^n vectors
void require_same_satisfying_set(const IpModel& a, const IpModel& b) {
  REQUIRE(a.var_count() == b.var_count());
  const int n = a.var_count();
  std::vector<uint8_t> x(n, 0);
  for (uint64_t bits = 0; bits < (1ull << n); ++bits) {
    for (int v = 0; v < n; ++v) x[v] = (bits >> v) & 1;
    const EvalResult ra = eval(a, x);
    const EvalResult rb = eval(b, x);
    REQUIRE(ra.satisfied == rb.satisfied);
    REQUIRE(ra.objective == rb.objective);
  }
}

IpModel random_model(uint64_t seed, int nvars, int ncons) {
  std::mt19937_64 rng(seed);
  IpModel m;
  for (int v = 0; v < nvars; ++v) m.add_var("x" + std::to_string(v));
  auto rand_expr = [&] {
    LinExpr e;
    const int terms = fstest::irand(rng, 1, std::min(nvars, 4));
    for (int k = 0; k < terms; ++k) e.add(fstest::irand(rng, -3, 3), fstest::irand(rng, 0, nvars - 1));
    e.canonicalize();
    if (e.terms.empty()) e.add(1, 0);
    return e;
  };
  for (int c = 0; c < ncons; ++c) {
    const Rel rel = std::array<Rel, 3>{Rel::Le, Rel::Ge, Rel::Eq}[fstest::irand(rng, 0, 2)];
    const long long bound = fstest::irand(rng, -2, 4);
    const double kind = fstest::urand(rng);
    if (kind < 0.5) {
      m.add_linear(rand_expr(), rel, bound);
    } else if (kind < 0.8) {
      m.add_implication(fstest::irand(rng, 0, nvars - 1), rand_expr(), rel, bound);
    } else {
      const Rel reified = rel == Rel::Eq ? Rel::Le : rel;
      m.add_reified(fstest::irand(rng, 0, nvars - 1), rand_expr(), reified, bound);
    }
  }
  LinExpr obj;
  for (int v = 0; v < nvars; ++v) obj.add(fstest::irand(rng, -2, 3), v);
  obj.constant = fstest::irand(rng, -2, 2);
  obj.canonicalize();
  m.set_objective(fstest::urand(rng) < 0.5 ? Sense::Maximize : Sense::Minimize, obj);
  return m;
}

}  // namespace

TEST_CASE("add_var hands out dense indices and rejects duplicates", "[ilp]") {
  IpModel m;
  REQUIRE(m.add_var("a") == 0);
  REQUIRE(m.add_var("b") == 1);
  REQUIRE_THROWS_AS(m.add_var("a"), DuplicateNameError);
  REQUIRE(m.var_count() == 2);
  REQUIRE(m.find("b").value() == 1);
  REQUIRE_FALSE(m.find("zzz").has_value());
}

TEST_CASE("eval checks constraints semantically", "[ilp]") {
  IpModel m;
  const Var x = m.add_var("x");
  const Var y = m.add_var("y");
  m.add_linear(LinExpr().add(1, x).add(1, y), Rel::Le, 1);
  m.set_objective(Sense::Maximize, LinExpr().add(2, x).add(3, y));

  SECTION("all-zero satisfies nonnegative <= rows") {
    const std::vector<uint8_t> a{0, 0};
    REQUIRE(eval(m, a).satisfied);
  }
  SECTION("violated equality") {
    m.add_linear(LinExpr().add(1, x), Rel::Eq, 1);
    const std::vector<uint8_t> a{0, 0};
    REQUIRE_FALSE(eval(m, a).satisfied);
  }
  SECTION("objective arithmetic") {
    IpModel free;
    free.add_var("x");
    free.add_var("y");
    free.set_objective(Sense::Maximize, LinExpr().add(2, 0).add(3, 1));
    const std::vector<uint8_t> a{1, 1};
    REQUIRE(eval(free, a).objective == 5);
  }
  SECTION("partial assignments are rejected") {
    const std::vector<uint8_t> a{0};
    REQUIRE_THROWS_AS(eval(m, a), PartialAssignmentError);
  }
}

TEST_CASE("linearize rewrites implications with derived big-M", "[ilp][linearize]") {
  SECTION("b -> x1 + x2 <= 1 becomes x1 + x2 + b <= 2") {
    IpModel m;
    const Var b = m.add_var("b");
    const Var x1 = m.add_var("x1");
    const Var x2 = m.add_var("x2");
    m.add_implication(b, LinExpr().add(1, x1).add(1, x2), Rel::Le, 1);
    m.set_objective(Sense::Maximize, {});
    const IpModel lin = linearize(m);
    REQUIRE(lin.constraints().size() == 1);
    const LinearCon& con = lin.constraints()[0].body;
    REQUIRE(lin.constraints()[0].kind == Constraint::Kind::Linear);
    REQUIRE(con.rel == Rel::Le);
    REQUIRE(con.bound == 2);
    REQUIRE(con.expr.terms.size() == 3);  // x1 + x2 + 1*b, canonical order b,x1,x2
    for (const Term& t : con.expr.terms) REQUIRE(t.coeff == 1);
    require_same_satisfying_set(m, lin);
  }
  SECTION("model without implications is unchanged") {
    IpModel m;
    const Var x = m.add_var("x");
    m.add_linear(LinExpr().add(1, x), Rel::Ge, 1);
    m.set_objective(Sense::Maximize, LinExpr().add(1, x));
    const IpModel lin = linearize(m);
    REQUIRE(lin.constraints().size() == 1);
    REQUIRE(lin.constraints()[0].body.rel == Rel::Ge);
    REQUIRE(lin.constraints()[0].body.bound == 1);
    require_same_satisfying_set(m, lin);
  }
  SECTION("reified b <=> x >= 1 simplifies to b <= x and x <= b") {
    IpModel m;
    const Var b = m.add_var("b");
    const Var x = m.add_var("x");
    m.add_reified(b, LinExpr().add(1, x), Rel::Ge, 1);
    m.set_objective(Sense::Maximize, {});
    const IpModel lin = linearize(m);
    REQUIRE(lin.constraints().size() == 2);
    // b <= x:  -x + b <= 0    x <= b:  x - b <= 0
    for (const Constraint& c : lin.constraints()) {
      REQUIRE(c.kind == Constraint::Kind::Linear);
      REQUIRE(c.body.rel == Rel::Le);
      REQUIRE(c.body.bound == 0);
      REQUIRE(c.body.expr.terms.size() == 2);
    }
    require_same_satisfying_set(m, lin);
  }
  SECTION("reified equality is rejected") {
    IpModel m;
    const Var b = m.add_var("b");
    const Var x = m.add_var("x");
    REQUIRE_THROWS_AS(m.add_reified(b, LinExpr().add(1, x), Rel::Eq, 1), UnsupportedConstraintError);
  }
  SECTION("satisfying sets survive linearization on random models") {
    for (int trial = 0; trial < 120; ++trial) {
      const IpModel m = random_model(9000 + trial, 2 + trial % 5, 4);
      require_same_satisfying_set(m, linearize(m));
    }
  }
}

TEST_CASE("LP export and parse round-trip", "[ilp][lp]") {
  SECTION("minimal model contains the standard sections") {
    IpModel m;
    const Var x = m.add_var("x");
    m.set_objective(Sense::Maximize, LinExpr().add(1, x));
    const std::string text = export_lp(m);
    REQUIRE(text.find("Maximize") != std::string::npos);
    REQUIRE(text.find("Binary") != std::string::npos);
    REQUIRE(text.find("x0") != std::string::npos);
    REQUIRE(text.find("End") != std::string::npos);
  }
  SECTION("golden document is bit-exact") {
    IpModel m;
    const Var l = m.add_var("l[alg,ada]");
    const Var a = m.add_var("a[alg,ada,amy]");
    m.add_linear(LinExpr().add(1, a).add(-1, l), Rel::Le, 0);
    m.add_linear(LinExpr().add(1, l).add(1, a), Rel::Ge, 1);
    m.set_objective(Sense::Maximize, LinExpr().add(1, a));
    const std::string expected =
        "\\ 0-1 model, 2 variables, 2 constraints\n"
        "Maximize\n"
        " obj: x1\n"
        "Subject To\n"
        " c0: - x0 + x1 <= 0\n"
        " c1: x0 + x1 >= 1\n"
        "Binary\n"
        " x0\n"
        " x1\n"
        "End\n"
        "\\ name-map begin\n"
        "\\ x0 := l[alg,ada]\n"
        "\\ x1 := a[alg,ada,amy]\n"
        "\\ name-map end\n";
    REQUIRE(export_lp(m) == expected);
  }
  SECTION("exporting a model with implications is a precondition violation") {
    IpModel m;
    const Var b = m.add_var("b");
    const Var x = m.add_var("x");
    m.add_implication(b, LinExpr().add(1, x), Rel::Le, 0);
    m.set_objective(Sense::Maximize, {});
    REQUIRE_THROWS_AS(export_lp(m), PreconditionError);
  }
  SECTION("round-trip preserves names, counts, relations, coefficients, objective") {
    for (int trial = 0; trial < 40; ++trial) {
      const IpModel m = linearize(random_model(7000 + trial, 3 + trial % 4, 5));
      const IpModel back = parse_lp(export_lp(m));
      REQUIRE(back.var_count() == m.var_count());
      REQUIRE(back.constraints().size() == m.constraints().size());
      for (int v = 0; v < m.var_count(); ++v) REQUIRE(back.name(v) == m.name(v));
      for (size_t k = 0; k < m.constraints().size(); ++k) {
        const LinearCon& a = m.constraints()[k].body;
        const LinearCon& b = back.constraints()[k].body;
        REQUIRE(a.rel == b.rel);
        REQUIRE(a.bound == b.bound);
        REQUIRE(a.expr.terms.size() == b.expr.terms.size());
        for (size_t t = 0; t < a.expr.terms.size(); ++t) {
          REQUIRE(a.expr.terms[t].coeff == b.expr.terms[t].coeff);
          REQUIRE(a.expr.terms[t].var == b.expr.terms[t].var);
        }
      }
      REQUIRE(back.sense() == m.sense());
      REQUIRE(back.objective().constant == m.objective().constant);
      REQUIRE(back.objective().terms.size() == m.objective().terms.size());
      // and the parsed model evaluates identically
      std::vector<uint8_t> x(m.var_count(), 0);
      std::mt19937_64 rng(trial);
      for (int probe = 0; probe < 20; ++probe) {
        for (auto& bit : x) bit = fstest::urand(rng) < 0.5;
        REQUIRE(eval(m, x).satisfied == eval(back, x).satisfied);
        REQUIRE(eval(m, x).objective == eval(back, x).objective);
      }
    }
  }
}

TEST_CASE("parse_lp rejects malformed documents", "[ilp][lp]") {
  SECTION("empty document") { REQUIRE_THROWS_AS(parse_lp(""), ParseError); }
  SECTION("unknown relation symbol") {
    const std::string text =
        "Maximize\n obj: x0\nSubject To\n c0: x0 <> 1\nBinary\n x0\nEnd\n";
    REQUIRE_THROWS_AS(parse_lp(text), ParseError);
  }
  SECTION("missing binary section") {
    REQUIRE_THROWS_AS(parse_lp("Maximize\n obj: x0\nSubject To\n c0: x0 <= 1\nEnd\n"), ParseError);
  }
  SECTION("parse errors carry positions") {
    try {
      parse_lp("Maximize\n obj: x0\nSubject To\n c0: x0 <> 1\nBinary\n x0\nEnd\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      REQUIRE(e.line == 4);
      REQUIRE(e.column > 0);
    }
  }
}
