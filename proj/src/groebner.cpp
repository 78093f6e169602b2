#include "ybsegre/groebner.hpp"

#include <algorithm>
#include <map>

namespace ybsegre {

namespace {

// One rewriting pass: reduce f against the polynomials in `basis`, skipping
// index `skip` (used during inter-reduction). Deterministic: always rewrite
// the deg-lex largest reducible word, at its leftmost reducible position,
// by the first matching basis element.
NcPoly reduce_against(NcPoly f, const std::vector<NcPoly>& basis, std::size_t skip) {
  while (!f.is_zero()) {
    // find the deg-lex largest reducible term, then rewrite and rescan
    // (the map is modified by the rewrite, so never advance its iterators
    // past a modification)
    bool reduced_one = false;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      const Word w = it->first;
      const Rational c = it->second;
      std::size_t best_pos = 0;
      std::size_t best_g = basis.size();
      for (std::size_t g = 0; g < basis.size(); ++g) {
        if (g == skip || basis[g].is_zero()) continue;
        auto pos = w.find(basis[g].leading_monomial());
        if (!pos) continue;
        if (best_g == basis.size() || *pos < best_pos || (*pos == best_pos && g < best_g)) {
          best_pos = *pos;
          best_g = g;
        }
      }
      if (best_g == basis.size()) continue;
      const NcPoly& g = basis[best_g];
      const std::size_t lm_len = g.leading_monomial().size();
      NcPoly left = NcPoly::monomial(w.subword(0, best_pos), c);
      NcPoly right = NcPoly::monomial(w.subword(best_pos + lm_len, w.size() - best_pos - lm_len));
      f -= left * g * right;
      reduced_one = true;
      break;
    }
    if (!reduced_one) break;
  }
  return f;
}

// Tail-reduce every element against the others and drop elements that
// reduce to zero, until stable. Leaves no leading monomial divisible by
// another and every tail in normal form.
void inter_reduce(std::vector<NcPoly>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t g = 0; g < basis.size(); ++g) {
      if (basis[g].is_zero()) continue;
      NcPoly reduced = reduce_against(basis[g], basis, g);
      if (reduced != basis[g]) {
        changed = true;
        reduced.make_monic();
        basis[g] = std::move(reduced);
      }
    }
  }
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const NcPoly& f) { return f.is_zero(); }),
              basis.end());
}

void sort_canonical(std::vector<NcPoly>& basis) {
  std::sort(basis.begin(), basis.end(), poly_less);
}

struct Overlap {
  Word word;       // the ambiguity word
  std::size_t g1;  // LM(g1) is a prefix of word
  std::size_t g2;  // LM(g2) is a suffix of word
  std::size_t cut; // overlap length: suffix of LM(g1) = prefix of LM(g2)
};

// All proper overlap ambiguities of exactly the given total degree among
// current leading monomials. Inclusion ambiguities cannot occur because the
// basis is kept inter-reduced.
std::vector<Overlap> overlaps_of_degree(const std::vector<NcPoly>& basis, std::size_t degree) {
  std::vector<Overlap> out;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const Word& u = basis[a].leading_monomial();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Word& v = basis[b].leading_monomial();
      const std::size_t max_cut = std::min(u.size(), v.size()) - 1;
      for (std::size_t cut = 1; cut <= max_cut; ++cut) {
        if (u.size() + v.size() - cut != degree) continue;
        bool match = true;
        for (std::size_t k = 0; k < cut && match; ++k)
          match = u[u.size() - cut + k] == v[k];
        if (!match) continue;
        out.push_back({u * v.subword(cut, v.size() - cut), a, b, cut});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Overlap& x, const Overlap& y) {
    int c = compare_deglex(x.word, y.word);
    if (c != 0) return c < 0;
    if (x.g1 != y.g1) return x.g1 < y.g1;
    if (x.g2 != y.g2) return x.g2 < y.g2;
    return x.cut < y.cut;
  });
  return out;
}

// S-element of an overlap w = LM(g1) * s = t * LM(g2): the difference
// g1 * s - t * g2, whose leading words cancel.
NcPoly s_element(const std::vector<NcPoly>& basis, const Overlap& o) {
  const Word& u = basis[o.g1].leading_monomial();
  const Word& v = basis[o.g2].leading_monomial();
  Word s = v.subword(o.cut, v.size() - o.cut);
  Word t = u.subword(0, u.size() - o.cut);
  return basis[o.g1] * NcPoly::monomial(s) - NcPoly::monomial(t) * basis[o.g2];
}

void check_homogeneous_input(const std::vector<NcPoly>& relations) {
  for (const NcPoly& f : relations) {
    if (f.is_zero()) throw ValidationError("zero relation passed to Groebner completion");
    if (!f.is_homogeneous(f.degree()) || f.degree() < 2)
      throw ValidationError("Groebner completion expects homogeneous relations of degree >= 2");
  }
}

} // namespace

TruncatedGB truncated_groebner(std::uint32_t alphabet, std::vector<NcPoly> relations,
                               std::uint32_t degree_bound) {
  if (degree_bound < 2)
    throw PreconditionError("Groebner truncation degree must be at least 2");
  check_homogeneous_input(relations);
  for (NcPoly& f : relations) f.make_monic();

  std::vector<NcPoly> basis = std::move(relations);
  inter_reduce(basis);
  sort_canonical(basis);

  // Homogeneous input keeps every S-element of a degree-d ambiguity at
  // degree exactly d, and new basis elements of degree d only create
  // ambiguities of degree > d. So one sweep per degree suffices.
  for (std::size_t d = 3; d <= degree_bound; ++d) {
    const std::size_t before = basis.size();
    for (const Overlap& o : overlaps_of_degree(basis, d)) {
      NcPoly s = reduce_against(s_element(basis, o), basis, basis.size());
      if (!s.is_zero()) {
        s.make_monic();
        basis.push_back(std::move(s));
      }
    }
    if (basis.size() != before) {
      inter_reduce(basis);
      sort_canonical(basis);
    }
  }

  TruncatedGB gb;
  gb.alphabet = alphabet;
  gb.basis = std::move(basis);
  gb.truncation_degree = degree_bound;
  gb.complete_through = degree_bound;
  return gb;
}

TruncatedGB truncated_groebner(const QuadraticPresentation& p, std::uint32_t degree_bound) {
  p.validate();
  return truncated_groebner(p.n_gens, p.relations, degree_bound);
}

NcPoly normal_form(const NcPoly& f, const TruncatedGB& gb) {
  if (f.alphabet() != gb.alphabet)
    throw PreconditionError("polynomial alphabet does not match Groebner basis alphabet");
  if (!f.is_zero() && f.degree() > gb.complete_through)
    throw PreconditionError("degree exceeds certified truncation of the Groebner basis");
  return reduce_against(f, gb.basis, gb.basis.size());
}

std::vector<Word> words_avoiding(std::uint32_t alphabet, const std::vector<Word>& forbidden,
                                 std::size_t m) {
  // depth-first generation; a new letter only needs the suffixes ending at
  // it checked against the patterns
  std::vector<Word> out;
  std::vector<std::uint32_t> cur;
  auto suffix_clash = [&](std::size_t len) {
    for (const Word& p : forbidden) {
      if (p.size() == 0 || p.size() > len) continue;
      bool eq = true;
      for (std::size_t k = 0; k < p.size() && eq; ++k)
        eq = cur[len - p.size() + k] == p[k];
      if (eq) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t len) -> void {
    if (len == m) {
      out.emplace_back(alphabet, cur);
      return;
    }
    for (std::uint32_t c = 0; c < alphabet; ++c) {
      cur.push_back(c);
      if (!suffix_clash(len + 1)) self(self, len + 1);
      cur.pop_back();
    }
  };
  if (m == 0) {
    out.push_back(Word::unit(alphabet));
    return out;
  }
  rec(rec, 0);
  return out;
}

NormalMonomialSet normal_monomials(const TruncatedGB& gb, std::size_t m) {
  if (m > gb.complete_through)
    throw PreconditionError("degree exceeds certified truncation of the Groebner basis");
  std::vector<Word> lms;
  lms.reserve(gb.basis.size());
  for (const NcPoly& g : gb.basis) lms.push_back(g.leading_monomial());
  NormalMonomialSet out;
  out.degree = m;
  out.words = words_avoiding(gb.alphabet, lms, m);
  return out;
}

std::vector<std::size_t> hilbert_function(const TruncatedGB& gb, std::size_t up_to) {
  std::vector<std::size_t> dims;
  dims.reserve(up_to + 1);
  for (std::size_t m = 0; m <= up_to; ++m) dims.push_back(normal_monomials(gb, m).words.size());
  return dims;
}

std::size_t count_avoiding_quadratic(std::uint32_t alphabet, const std::vector<Word>& forbidden,
                                     std::size_t m) {
  for (const Word& p : forbidden)
    if (p.size() != 2)
      throw PreconditionError("transfer-matrix count expects quadratic patterns");
  if (m == 0) return 1;
  std::vector<std::vector<bool>> allowed(alphabet, std::vector<bool>(alphabet, true));
  for (const Word& p : forbidden) allowed[p[0]][p[1]] = false;
  std::vector<std::uint64_t> dp(alphabet, 1); // paths ending in each letter
  for (std::size_t step = 1; step < m; ++step) {
    std::vector<std::uint64_t> next(alphabet, 0);
    for (std::uint32_t a = 0; a < alphabet; ++a)
      for (std::uint32_t b = 0; b < alphabet; ++b)
        if (allowed[a][b]) next[b] += dp[a];
    dp = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t v : dp) total += v;
  return static_cast<std::size_t>(total);
}

} // namespace ybsegre
