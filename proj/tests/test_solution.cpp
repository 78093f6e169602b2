#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "ybsegre/json_io.hpp"
#include "ybsegre/rational.hpp"
#include "ybsegre/solution.hpp"

#include <algorithm>
#include <set>

using namespace ybsegre;

namespace {

// conjugate the table by a relabelling permutation
QuadraticSet relabel(const QuadraticSet& qs, const std::vector<std::uint32_t>& sigma) {
  QuadraticSet out;
  out.n = qs.n;
  out.labels = qs.labels;
  out.table.resize(qs.table.size());
  for (std::uint32_t i = 0; i < qs.n; ++i)
    for (std::uint32_t j = 0; j < qs.n; ++j) {
      auto [p, q] = qs.r(i, j);
      out.table[static_cast<std::size_t>(sigma[i]) * qs.n + sigma[j]] = {sigma[p], sigma[q]};
    }
  return out;
}

} // namespace

TEST_CASE("structural validation catches bad tables") {
  QuadraticSet qs = corpus::sqfree3();
  CHECK_NOTHROW(qs.validate());

  QuadraticSet bad = qs;
  bad.table[4] = {3, 0};
  CHECK_THROWS_WITH_AS(bad.validate(), "index out of range in r table", ValidationError);

  bad = qs;
  bad.table.pop_back();
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  bad = qs;
  bad.labels.pop_back();
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  bad = qs;
  bad.n = 0;
  bad.table.clear();
  bad.labels.clear();
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("solution documents round-trip through JSON") {
  QuadraticSet qs = corpus::sqfree3();
  QuadraticSet back = solution_from_json(solution_to_json(qs));
  CHECK(back.n == qs.n);
  CHECK(back.table == qs.table);
  CHECK(back.labels == qs.labels);

  // labels are optional and default to x1..xn
  json doc = solution_to_json(corpus::perm2());
  doc.erase("labels");
  CHECK(solution_from_json(doc).labels == std::vector<std::string>{"x1", "x2"});

  doc = solution_to_json(qs);
  doc["r"][0][0][0] = 5;
  CHECK_THROWS_WITH_AS(solution_from_json(doc), "index out of range in r table",
                       ValidationError);

  doc = solution_to_json(qs);
  doc["r"][1].erase(2);
  CHECK_THROWS_AS(solution_from_json(doc), ValidationError); // non-square

  CHECK_THROWS_AS(solution_from_json(json{{"size", 2}}), ValidationError);
  CHECK_THROWS_AS(solution_from_json(json::array()), ValidationError);
  CHECK_THROWS_AS(load_solution("/nonexistent/file.json"), ValidationError);
}

TEST_CASE("action tables follow the r(i,j) = (left[i][j], right[j][i]) convention") {
  QuadraticSet qs = corpus::sqfree3();
  ActionTables t = ActionTables::from(qs);
  for (std::uint32_t i = 0; i < qs.n; ++i)
    for (std::uint32_t j = 0; j < qs.n; ++j) {
      auto [p, q] = qs.r(i, j);
      CHECK(t.left[i][j] == p);
      CHECK(t.right[j][i] == q);
    }
  // the left action of x3 swaps x1, x2; all other actions are trivial
  CHECK(t.left[2] == std::vector<std::uint32_t>{1, 0, 2});
  CHECK(t.left[0] == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(t.right[2] == std::vector<std::uint32_t>{1, 0, 2});
}

TEST_CASE("flip solutions of any order pass every axiom") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    SolutionClassification c = classify(QuadraticSet::flip(n));
    CHECK(c.is_bijective);
    CHECK(c.is_braided);
    CHECK(c.is_involutive);
    CHECK(c.is_nondegenerate);
    CHECK(c.is_square_free);
    CHECK(c.is_solution);
  }
}

TEST_CASE("classification of the corpus pair") {
  SolutionClassification cx = classify(corpus::sqfree3());
  CHECK(cx.is_solution);
  CHECK(cx.is_square_free);

  SolutionClassification cy = classify(corpus::perm2());
  CHECK(cy.is_solution);
  CHECK_FALSE(cy.is_square_free);
}

TEST_CASE("classification flags degenerate and non-involutive maps") {
  // constant-ish map: r(i, j) = (0, 0)
  QuadraticSet degen;
  degen.n = 2;
  degen.table = {{0, 0}, {0, 0}, {0, 0}, {0, 0}};
  degen.labels = QuadraticSet::default_labels(2, "x");
  SolutionClassification c = classify(degen);
  CHECK_FALSE(c.is_bijective);
  CHECK_FALSE(c.is_involutive);
  CHECK_FALSE(c.is_nondegenerate);
  CHECK_FALSE(c.is_solution);
  CHECK_THROWS_AS(orbit_report(degen), PreconditionError);

  // bijective but not involutive: r(i, j) = (j, i + 1 mod 2)
  QuadraticSet rot;
  rot.n = 2;
  rot.table = {{0, 1}, {1, 1}, {0, 0}, {1, 0}};
  rot.labels = QuadraticSet::default_labels(2, "x");
  c = classify(rot);
  CHECK(c.is_bijective);
  CHECK_FALSE(c.is_involutive);
  CHECK_THROWS_AS(orbit_report(rot), PreconditionError);
  CHECK_THROWS_AS(yb_presentation(rot), PreconditionError);
}

TEST_CASE("orbit report of the corpus pair") {
  OrbitReport rx = orbit_report(corpus::sqfree3());
  CHECK(rx.fixed_point_count() == 3);
  CHECK(rx.nontrivial_orbit_count() == 3);
  CHECK(rx.orbit_count() == 6);
  // square-free, so the fixed points are exactly the diagonal
  std::vector<std::pair<std::uint32_t, std::uint32_t>> diag{{0, 0}, {1, 1}, {2, 2}};
  CHECK(rx.fixed_points == diag);
  using Orbit = std::pair<std::pair<std::uint32_t, std::uint32_t>,
                          std::pair<std::uint32_t, std::uint32_t>>;
  std::set<Orbit> orbits(rx.nontrivial_orbits.begin(), rx.nontrivial_orbits.end());
  CHECK(orbits == std::set<Orbit>{{{1, 0}, {0, 1}}, {{2, 1}, {0, 2}}, {{2, 0}, {1, 2}}});

  OrbitReport ry = orbit_report(corpus::perm2());
  CHECK(ry.fixed_point_count() == 2);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> off_diag{{0, 1}, {1, 0}};
  CHECK(ry.fixed_points == off_diag);
  CHECK(ry.nontrivial_orbit_count() == 1);
  CHECK(ry.nontrivial_orbits[0].first == std::make_pair(1u, 1u));
  CHECK(ry.nontrivial_orbits[0].second == std::make_pair(0u, 0u));
}

TEST_CASE("enumeration counts are frozen") {
  CHECK(enumerate_solutions(1).size() == 1);
  CHECK(enumerate_solutions(2).size() == 2);
  CHECK(enumerate_solutions(3).size() == 12);
  CHECK(enumerate_solutions(4).size() == 168);
  CHECK_THROWS_AS(enumerate_solutions(5), PreconditionError);
  CHECK_THROWS_AS(enumerate_solutions(0), PreconditionError);

  std::size_t sf3 = 0;
  for (const QuadraticSet& qs : enumerate_solutions(3))
    if (classify(qs).is_square_free) ++sf3;
  CHECK(sf3 == 4);
  std::size_t sf4 = 0;
  for (const QuadraticSet& qs : enumerate_solutions(4))
    if (classify(qs).is_square_free) ++sf4;
  CHECK(sf4 == 30);
}

TEST_CASE("order-2 enumeration agrees with brute force over all 24 pair bijections") {
  // independent oracle: run over every bijection of the 4 pairs directly
  std::vector<std::uint32_t> perm{0, 1, 2, 3};
  std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> brute;
  do {
    QuadraticSet qs;
    qs.n = 2;
    qs.labels = QuadraticSet::default_labels(2, "x");
    for (std::uint32_t pair = 0; pair < 4; ++pair)
      qs.table.push_back({perm[pair] / 2, perm[pair] % 2});
    if (classify(qs).is_solution) brute.insert(qs.table);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> enumerated;
  for (const QuadraticSet& qs : enumerate_solutions(2)) enumerated.insert(qs.table);
  CHECK(brute.size() == 2);
  CHECK(brute == enumerated);
}

TEST_CASE("every enumerated solution satisfies the orbit counting facts") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (const QuadraticSet& qs : enumerate_solutions(n)) {
      SolutionClassification c = classify(qs);
      REQUIRE(c.is_solution);
      OrbitReport rep = orbit_report(qs);
      // a solution of order n has n fixed points and C(n,2) nontrivial orbits
      CHECK(rep.fixed_point_count() == n);
      CHECK(rep.nontrivial_orbit_count() == binom(n, 2));
      CHECK(rep.orbit_count() == binom(n + 1, 2));
      if (c.is_square_free)
        for (const auto& [i, j] : rep.fixed_points) CHECK(i == j);
      // fixed point iff trivial left action on that pair
      ActionTables t = ActionTables::from(qs);
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          CHECK((qs.r(i, j) == std::make_pair(i, j)) == (t.left[i][j] == i));
    }
  }
}

TEST_CASE("relabelling a solution stays a solution") {
  QuadraticSet qs = corpus::sqfree3();
  std::vector<std::uint32_t> sigma{2, 0, 1};
  QuadraticSet moved = relabel(qs, sigma);
  SolutionClassification c = classify(moved);
  CHECK(c.is_solution);
  CHECK(c.is_square_free);
}

TEST_CASE("cartesian product flattens componentwise actions") {
  QuadraticSet prod = cartesian_product(corpus::sqfree3(), corpus::perm2());
  CHECK(prod.n == 6);
  SolutionClassification c = classify(prod);
  CHECK(c.is_solution);
  CHECK_FALSE(c.is_square_free); // second factor is not square-free

  // spot check one entry: the left action gives (^{x3}x1, ^{y2}y1) =
  // (x2, y2) and the right action (x3^{x1}, y2^{y1}) = (x3, y1), so
  // r((x3,y2), (x1,y1)) = ((x2,y2), (x3,y1)) under flat(i,a) = 2i + a
  CHECK(prod.r(5, 0) == std::make_pair(3u, 4u));
  CHECK(prod.labels[5] == "(x3,y2)");

  OrbitReport rep = orbit_report(prod);
  CHECK(rep.fixed_point_count() == 6);
  CHECK(rep.nontrivial_orbit_count() == 15);

  QuadraticSet not_solution;
  not_solution.n = 2;
  not_solution.table = {{0, 0}, {0, 0}, {0, 0}, {0, 0}};
  not_solution.labels = QuadraticSet::default_labels(2, "x");
  CHECK_THROWS_AS(cartesian_product(corpus::sqfree3(), not_solution), PreconditionError);
}

TEST_CASE("product of square-free solutions is square-free") {
  QuadraticSet prod = cartesian_product(corpus::sqfree3(), QuadraticSet::flip(2));
  SolutionClassification c = classify(prod);
  CHECK(c.is_solution);
  CHECK(c.is_square_free);
}

TEST_CASE("z solution carries the contracted labels") {
  QuadraticSet z = z_solution(corpus::sqfree3(), corpus::perm2());
  CHECK(z.labels == std::vector<std::string>{"z11", "z12", "z21", "z22", "z31", "z32"});
  CHECK(z.table == cartesian_product(corpus::sqfree3(), corpus::perm2()).table);
}

TEST_CASE("presentation of the corpus pair") {
  QuadraticPresentation a = yb_presentation(corpus::sqfree3());
  CHECK(a.n_gens == 3);
  REQUIRE(a.relations.size() == 3);
  std::vector<std::string> printed;
  for (const NcPoly& f : a.relations) printed.push_back(f.str(a.labels));
  std::sort(printed.begin(), printed.end());
  CHECK(printed == std::vector<std::string>{"x2*x1 - x1*x2", "x3*x1 - x2*x3",
                                            "x3*x2 - x1*x3"});

  QuadraticPresentation b = yb_presentation(corpus::perm2());
  REQUIRE(b.relations.size() == 1);
  CHECK(b.relations[0].str(b.labels) == "y2*y2 - y1*y1");
}

TEST_CASE("presentations of enumerated solutions are oriented binomials") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (const QuadraticSet& qs : enumerate_solutions(n)) {
      QuadraticPresentation p = yb_presentation(qs);
      CHECK(p.relations.size() == binom(n, 2));
      for (const NcPoly& f : p.relations) {
        REQUIRE(f.term_count() == 2);
        const Word& u = f.leading_monomial();
        const Word& v = f.terms().begin()->first;
        CHECK(compare_deglex(u, v) > 0);
        CHECK(f.terms().begin()->second == -1);
        // the leading letter strictly drops across the relation
        CHECK(u[0] > v[0]);
      }
    }
  }
}
