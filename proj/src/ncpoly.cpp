#include "ybsegre/ncpoly.hpp"

#include <algorithm>

namespace ybsegre {

NcPoly NcPoly::monomial(Word w, Rational coeff) {
  NcPoly p(w.alphabet());
  if (coeff != 0) p.terms_.emplace(std::move(w), std::move(coeff));
  return p;
}

void NcPoly::add_term(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  if (w.alphabet() != alphabet_)
    throw PreconditionError("term alphabet does not match polynomial alphabet");
  auto [it, fresh] = terms_.try_emplace(w, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  if (alphabet_ != rhs.alphabet_)
    throw PreconditionError("polynomial arithmetic across different alphabets");
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
  if (alphabet_ != rhs.alphabet_)
    throw PreconditionError("polynomial arithmetic across different alphabets");
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly out(alphabet_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

NcPoly NcPoly::operator*(const NcPoly& rhs) const {
  if (alphabet_ != rhs.alphabet_)
    throw PreconditionError("polynomial arithmetic across different alphabets");
  NcPoly out(alphabet_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : rhs.terms_) out.add_term(u * v, cu * cv);
  return out;
}

const Word& NcPoly::leading_monomial() const {
  if (terms_.empty())
    throw PreconditionError("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& NcPoly::leading_coeff() const {
  if (terms_.empty())
    throw PreconditionError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

NcPoly& NcPoly::make_monic() {
  if (terms_.empty()) return *this;
  Rational lc = leading_coeff();
  if (lc != 1)
    for (auto& [w, c] : terms_) c /= lc;
  return *this;
}

std::size_t NcPoly::degree() const {
  if (terms_.empty())
    throw PreconditionError("degree of the zero polynomial");
  return terms_.rbegin()->first.size();
}

bool NcPoly::is_homogeneous(std::size_t deg) const {
  for (const auto& [w, c] : terms_)
    if (w.size() != deg) return false;
  return true;
}

std::string NcPoly::str(std::span<const std::string> labels) const {
  if (terms_.empty()) return "0";
  std::string out;
  // print from the leading term down
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    if (out.empty()) {
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += rational_str(c) + "*";
    } else {
      if (c < 0) {
        out += " - ";
        if (c != -1) out += rational_str(-c) + "*";
      } else {
        out += " + ";
        if (c != 1) out += rational_str(c) + "*";
      }
    }
    out += it->first.str(labels);
  }
  return out;
}

bool poly_less(const NcPoly& a, const NcPoly& b) {
  auto ia = a.terms().rbegin(), ea = a.terms().rend();
  auto ib = b.terms().rbegin(), eb = b.terms().rend();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    int c = compare_deglex(ia->first, ib->first);
    if (c != 0) return c < 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == ea && ib != eb;
}

void QuadraticPresentation::validate() const {
  if (labels.size() != n_gens)
    throw ValidationError("presentation has " + std::to_string(labels.size()) +
                          " labels for " + std::to_string(n_gens) + " generators");
  for (const NcPoly& f : relations) {
    if (f.alphabet() != n_gens)
      throw ValidationError("relation alphabet does not match generator count");
    if (f.is_zero()) throw ValidationError("zero relation in presentation");
    if (!f.is_homogeneous(2))
      throw ValidationError("relation is not homogeneous of degree 2");
    if (f.leading_coeff() != 1) throw ValidationError("relation is not monic");
  }
  // pairwise distinct as polynomials
  std::vector<const NcPoly*> sorted;
  sorted.reserve(relations.size());
  for (const NcPoly& f : relations) sorted.push_back(&f);
  std::sort(sorted.begin(), sorted.end(),
            [](const NcPoly* a, const NcPoly* b) { return poly_less(*a, *b); });
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (*sorted[k - 1] == *sorted[k])
      throw ValidationError("duplicate relation in presentation");
}

} // namespace ybsegre
