#pragma once

#include "ybsegre/errors.hpp"
#include "ybsegre/ncpoly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ybsegre {

// A quadratic set: a finite set X = {x_0, .., x_{n-1}} with a map
// r : X x X -> X x X. Entry table[i*n+j] = (p, q) encodes r(x_i, x_j) =
// (x_p, x_q). No axioms are assumed at this level; bijectivity, the braid
// relation and so on are checked by classify() and required only by the
// operations that need them.
struct QuadraticSet {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> table; // n*n entries
  std::vector<std::string> labels;                            // size n

  std::pair<std::uint32_t, std::uint32_t> r(std::uint32_t i, std::uint32_t j) const {
    return table[static_cast<std::size_t>(i) * n + j];
  }

  // Structural well-formedness (sizes and index ranges), not the axioms.
  void validate() const;

  // The trivial solution r(x, y) = (y, x).
  static QuadraticSet flip(std::uint32_t n);

  // The permutation solution r(x_i, x_j) = (x_{sigma(j)}, x_{sigma^{-1}(i)})
  // for a permutation sigma given in one-line notation.
  static QuadraticSet permutation(const std::vector<std::uint32_t>& sigma);

  static std::vector<std::string> default_labels(std::uint32_t n, const std::string& stem);
};

// Left and right action tables derived from r via
// r(x_i, x_j) = (left[i][j], right[j][i]); left[i][j] is the index of the
// left action of x_i on x_j and right[j][i] the right action of x_j on x_i.
struct ActionTables {
  std::vector<std::vector<std::uint32_t>> left;
  std::vector<std::vector<std::uint32_t>> right;

  static ActionTables from(const QuadraticSet& qs);
};

struct SolutionClassification {
  bool is_bijective = false;
  bool is_braided = false;     // r12 r23 r12 = r23 r12 r23 on all triples
  bool is_involutive = false;  // r o r = id on all pairs
  bool is_nondegenerate = false; // every left row and right row a permutation
  bool is_square_free = false; // r(x, x) = (x, x) for all x
  // Nondegenerate involutive braided; the objects all main theorems are about.
  bool is_solution = false;
};

// Exhaustive check of every axiom on the full table (n^3 triples for the
// braid relation). No randomization, no sampling.
SolutionClassification classify(const QuadraticSet& qs);

// Orbits of <r> acting on X x X. For involutive r every orbit is a fixed
// point or a transposition {u, r(u)}, which is what this report lists.
struct OrbitReport {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fixed_points;
  // Each nontrivial orbit stored as {larger, smaller} in deg-lex order of
  // the corresponding length-2 words.
  std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>,
                        std::pair<std::uint32_t, std::uint32_t>>> nontrivial_orbits;

  std::size_t fixed_point_count() const { return fixed_points.size(); }
  std::size_t nontrivial_orbit_count() const { return nontrivial_orbits.size(); }
  std::size_t orbit_count() const { return fixed_points.size() + nontrivial_orbits.size(); }
};

// Requires r involutive (PreconditionError otherwise).
OrbitReport orbit_report(const QuadraticSet& qs);

// Cartesian product of two solutions: on pairs (x, y), acts componentwise
// by r1 on the x parts and r2 on the y parts. Pairs are flattened by
// (i, a) -> i*n + a where n is the order of the second factor. Both inputs
// must be solutions (PreconditionError otherwise).
QuadraticSet cartesian_product(const QuadraticSet& a, const QuadraticSet& b);

// Same underlying solution as cartesian_product but carrying the generator
// labels z{i}{a} (1-based display indices) used for presentations.
QuadraticSet z_solution(const QuadraticSet& a, const QuadraticSet& b);

// All solutions (nondegenerate involutive braided) on {x_0..x_{n-1}},
// labelled, i.e. without identification up to isomorphism. Deterministic
// order. n is capped at 4; larger orders throw PreconditionError.
std::vector<QuadraticSet> enumerate_solutions(std::uint32_t n);

// Quadratic algebra of an involutive nondegenerate quadratic set: one
// relation u - r(u) per nontrivial r-orbit on degree-2 words, oriented so
// the deg-lex larger word leads. Throws PreconditionError when r is not
// involutive or not nondegenerate.
QuadraticPresentation yb_presentation(const QuadraticSet& qs);

} // namespace ybsegre
