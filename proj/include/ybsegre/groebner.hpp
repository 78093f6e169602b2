#pragma once

#include "ybsegre/ncpoly.hpp"
#include "ybsegre/solution.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ybsegre {

// A degree-truncated two-sided noncommutative Groebner basis for a
// homogeneous ideal, under deg-lex. `basis` is inter-reduced (no leading
// monomial divides another, tails are in normal form) and sorted by
// (degree, leading monomial). Every overlap ambiguity of total degree up to
// complete_through resolves to zero, so normal words of degree
// m <= complete_through are a basis of the degree-m component of the
// quotient. Nothing is claimed beyond that degree.
struct TruncatedGB {
  std::uint32_t alphabet = 0;
  std::vector<NcPoly> basis;
  std::uint32_t truncation_degree = 0;
  std::uint32_t complete_through = 0;
};

// Buchberger-style completion on homogeneous input, processing overlap
// ambiguities degree by degree in deg-lex order of the ambiguity word.
// Fully deterministic. Input relations must be homogeneous of degree >= 2.
TruncatedGB truncated_groebner(const QuadraticPresentation& p, std::uint32_t degree_bound);
TruncatedGB truncated_groebner(std::uint32_t alphabet, std::vector<NcPoly> relations,
                               std::uint32_t degree_bound);

// Remainder of f under the rewriting system LM(g) -> LM(g) - g. Requires
// deg f <= gb.complete_through (PreconditionError otherwise); the result is
// then canonical regardless of rewriting order.
NcPoly normal_form(const NcPoly& f, const TruncatedGB& gb);

struct NormalMonomialSet {
  std::size_t degree = 0;
  std::vector<Word> words; // deg-lex order
};

// Degree-m words containing no basis leading monomial as a factor.
// Requires m <= gb.complete_through.
NormalMonomialSet normal_monomials(const TruncatedGB& gb, std::size_t m);

// h(m) = |normal_monomials(gb, m)| for m = 0..up_to.
std::vector<std::size_t> hilbert_function(const TruncatedGB& gb, std::size_t up_to);

// Dimension of the degree-m component of the quotient algebra, computed by
// exact linear algebra alone: n^m minus the rank of the span of all
// a * f * b with f a relation and |a| + deg f + |b| = m. Deliberately
// independent of the rewriting engine so the two routes cross-check each
// other. Desk scale only: throws PreconditionError when n^m is too large.
std::size_t quotient_dim_oracle(const QuadraticPresentation& p, std::size_t m);

struct QuadraticGBCheck {
  bool is_groebner = false;
  // When not a Groebner basis: the degree-3 ambiguity word whose S-element
  // fails to reduce to zero.
  std::optional<Word> witness;
};

// Diamond-lemma test for a monic quadratic presentation with pairwise
// distinct leading monomials: the relations are a Groebner basis iff every
// degree-3 overlap ambiguity resolves to zero. Throws PreconditionError
// when leading monomials collide.
QuadraticGBCheck is_groebner_quadratic(const QuadraticPresentation& p);

// Binomial skew polynomial shape of yb_presentation(qs) under the given
// enumeration, plus the Groebner certificate. Requires qs to be a solution.
struct PbwReport {
  bool square_free = false;
  QuadraticGBCheck gb; // certificate for the quadratic relations
  // Shape conditions on the relation set x_j x_i - c x_i' x_j', i < j:
  bool shape_coeffs = false;      // (a) every coefficient a unit (here: 1)
  bool shape_indices = false;     // (b) j > i' and i' < j' in every relation
  bool shape_onto = false;        // (c) every ordered x_i x_j, i < j, occurs as a tail
  bool binomial_skew_ring = false; // (a)-(c) and the Groebner certificate
  // Raised only when certification succeeds on a non-square-free solution,
  // which would contradict the PBW theorem. A square-free solution can
  // legitimately fail certification under an improper enumeration.
  bool discrepancy = false;
};

PbwReport pbw_check(const QuadraticSet& qs);

// Number of degree-m words avoiding the given quadratic leading monomials,
// counted by transfer-matrix dynamic programming over the last letter.
// Used as an internal cross-check against explicit enumeration.
std::size_t count_avoiding_quadratic(std::uint32_t alphabet,
                                     const std::vector<Word>& forbidden,
                                     std::size_t m);

// Degree-m words avoiding every word of `forbidden` as a factor, deg-lex
// order. Patterns may have any degree >= 1.
std::vector<Word> words_avoiding(std::uint32_t alphabet,
                                 const std::vector<Word>& forbidden,
                                 std::size_t m);

} // namespace ybsegre
