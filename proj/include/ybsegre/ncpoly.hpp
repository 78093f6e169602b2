#pragma once

#include "ybsegre/rational.hpp"
#include "ybsegre/word.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace ybsegre {

// Noncommutative polynomial over the rationals in the free algebra on
// `alphabet` generators. Terms are kept in a map ordered by deg-lex, so the
// leading term is the map's last entry and zero coefficients never linger.
class NcPoly {
public:
  using TermMap = std::map<Word, Rational, DegLexLess>;

  explicit NcPoly(std::uint32_t alphabet) : alphabet_(alphabet) {}
  static NcPoly monomial(Word w, Rational coeff = 1);

  std::uint32_t alphabet() const { return alphabet_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  NcPoly& operator*=(const Rational& c);
  NcPoly operator-() const;

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }

  // Free-algebra product (concatenation of words, bilinear).
  NcPoly operator*(const NcPoly& rhs) const;

  void add_term(const Word& w, const Rational& coeff);

  // Largest word under deg-lex. Calling either accessor on the zero
  // polynomial violates the precondition and throws.
  const Word& leading_monomial() const;
  const Rational& leading_coeff() const;

  NcPoly& make_monic();

  // Degree of the highest term; the zero polynomial has no degree (throws).
  std::size_t degree() const;
  // True when every term has length `deg` (the zero polynomial is
  // homogeneous of every degree).
  bool is_homogeneous(std::size_t deg) const;

  bool operator==(const NcPoly& rhs) const {
    return alphabet_ == rhs.alphabet_ && terms_ == rhs.terms_;
  }
  bool operator!=(const NcPoly& rhs) const { return !(*this == rhs); }

  std::string str(std::span<const std::string> labels) const;

private:
  std::uint32_t alphabet_ = 0;
  TermMap terms_;
};

// Total order on polynomials used only to make container contents
// deterministic: compare term lists from the leading end.
bool poly_less(const NcPoly& a, const NcPoly& b);

// A finitely presented quadratic algebra: free algebra on n_gens generators
// modulo homogeneous degree-2 relations. Relations are kept monic with the
// leading monomial strictly larger than every other monomial.
struct QuadraticPresentation {
  std::uint32_t n_gens = 0;
  std::vector<std::string> labels; // display names, size n_gens
  std::vector<NcPoly> relations;

  // Throws ValidationError when any structural invariant fails.
  void validate() const;
};

} // namespace ybsegre
