#include "ybsegre/groebner.hpp"
#include "ybsegre/linalg.hpp"

#include <algorithm>
#include <map>

namespace ybsegre {

namespace {

// n^m with an overflow-free desk-scale guard.
std::size_t pow_checked(std::uint32_t n, std::size_t m, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (n != 0 && v > cap / n)
      throw PreconditionError("size bound exceeded: word space too large for the dense oracle");
    v *= n;
  }
  if (v > cap)
    throw PreconditionError("size bound exceeded: word space too large for the dense oracle");
  return v;
}

} // namespace

// The degree-m component of the two-sided ideal generated by the relations
// is spanned by the words a * f * b with |a| + deg f + |b| = m. This builds
// that spanning set as sparse coordinate rows over the full word basis of
// degree m and computes its exact rank. No rewriting anywhere, so the
// result is a genuinely independent check of the Groebner route.
std::size_t quotient_dim_oracle(const QuadraticPresentation& p, std::size_t m) {
  p.validate();
  const std::uint32_t n = p.n_gens;
  const std::size_t words = pow_checked(n, m, 200000);
  if (m < 2) return words; // quadratic relations cannot meet degree 0 or 1

  std::vector<SparseRow> rows;
  for (const NcPoly& f : p.relations) {
    for (std::size_t la = 0; la + 2 <= m; ++la) {
      const std::size_t lb = m - 2 - la;
      for (const Word& a : words_of_degree(n, la)) {
        const std::size_t rank_a = word_rank(a);
        for (const Word& b : words_of_degree(n, lb)) {
          SparseRow row;
          row.reserve(f.term_count());
          for (const auto& [w, c] : f.terms()) {
            // rank(a w b) read as a base-n numeral
            std::size_t col = rank_a;
            for (std::size_t k = 0; k < w.size(); ++k) col = col * n + w[k];
            for (std::size_t k = 0; k < lb; ++k) col = col * n + b[k];
            row.emplace_back(static_cast<std::uint32_t>(col), c);
          }
          std::sort(row.begin(), row.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
          rows.push_back(std::move(row));
        }
      }
    }
  }
  const std::size_t ideal_rank = sparse_rank(std::move(rows));
  return words - ideal_rank;
}

QuadraticGBCheck is_groebner_quadratic(const QuadraticPresentation& p) {
  p.validate();
  // distinct leading monomials make reduction by the raw relation set
  // confluent enough to test: index relations by leading word
  std::map<Word, const NcPoly*, DegLexLess> by_lm;
  for (const NcPoly& f : p.relations) {
    if (!by_lm.emplace(f.leading_monomial(), &f).second)
      throw PreconditionError("duplicate leading monomials; quadratic Groebner test "
                              "expects pairwise distinct leading words");
  }

  auto reduce = [&](NcPoly f) {
    while (!f.is_zero()) {
      bool hit = false;
      for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Word w = it->first;
        const Rational c = it->second;
        for (std::size_t pos = 0; pos + 2 <= w.size(); ++pos) {
          auto match = by_lm.find(w.subword(pos, 2));
          if (match == by_lm.end()) continue;
          NcPoly left = NcPoly::monomial(w.subword(0, pos), c);
          NcPoly right = NcPoly::monomial(w.subword(pos + 2, w.size() - pos - 2));
          f -= left * *match->second * right;
          hit = true;
          break;
        }
        if (hit) break;
      }
      if (!hit) break;
    }
    return f;
  };

  // degree-3 overlap ambiguities: LM(g1) = uv, LM(g2) = vw share the middle
  // letter; the S-element g1 * w - u * g2 must reduce to zero
  QuadraticGBCheck out;
  out.is_groebner = true;
  for (const auto& [lm1, g1] : by_lm) {
    for (const auto& [lm2, g2] : by_lm) {
      if (lm1[1] != lm2[0]) continue;
      Word tail(p.n_gens, {lm2[1]});
      Word head(p.n_gens, {lm1[0]});
      NcPoly s = *g1 * NcPoly::monomial(tail) - NcPoly::monomial(head) * *g2;
      if (!reduce(std::move(s)).is_zero()) {
        out.is_groebner = false;
        out.witness = lm1 * tail;
        return out;
      }
    }
  }
  return out;
}

PbwReport pbw_check(const QuadraticSet& qs) {
  if (!classify(qs).is_solution)
    throw PreconditionError("PBW check requires a solution");
  PbwReport rep;
  rep.square_free = classify(qs).is_square_free;
  QuadraticPresentation pres = yb_presentation(qs);
  rep.gb = is_groebner_quadratic(pres);

  const std::uint32_t n = qs.n;
  // shape conditions of a binomial skew polynomial ring: C(n,2) binomial
  // relations x_j x_i - c x_i' x_j' with i < j, c a unit, j > i', i' < j',
  // and every strictly ascending monomial occurring as some tail
  rep.shape_coeffs = true;
  rep.shape_indices = pres.relations.size() == binom(n, 2);
  std::vector<bool> tail_seen(static_cast<std::size_t>(n) * n, false);
  for (const NcPoly& f : pres.relations) {
    if (f.term_count() != 2 || f.leading_coeff() != 1) rep.shape_coeffs = false;
    if (f.term_count() != 2) {
      rep.shape_indices = false;
      continue;
    }
    auto lead = f.terms().rbegin();
    auto tail = f.terms().begin();
    if (tail->second != -1) rep.shape_coeffs = false;
    const Word& u = lead->first;
    const Word& v = tail->first;
    const std::uint32_t j = u[0], i = u[1];
    const std::uint32_t ip = v[0], jp = v[1];
    if (!(j > i && j > ip && ip < jp)) rep.shape_indices = false;
    if (ip < jp) tail_seen[static_cast<std::size_t>(ip) * n + jp] = true;
  }
  rep.shape_onto = true;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (!tail_seen[static_cast<std::size_t>(i) * n + j]) rep.shape_onto = false;

  rep.binomial_skew_ring =
      rep.shape_coeffs && rep.shape_indices && rep.shape_onto && rep.gb.is_groebner;
  // a certified binomial skew polynomial ring on a non-square-free solution
  // would contradict the square-free classification
  rep.discrepancy = rep.binomial_skew_ring && !rep.square_free;
  return rep;
}

} // namespace ybsegre
