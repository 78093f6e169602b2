#include "ybsegre/segre.hpp"

#include "ybsegre/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ybsegre {

std::vector<std::string> SegreGenerators::labels(const std::string& stem) const {
  std::vector<std::string> out;
  out.reserve(count());
  for (std::uint32_t i = 1; i <= m; ++i)
    for (std::uint32_t a = 1; a <= n; ++a)
      out.push_back(stem + std::to_string(i) + std::to_string(a));
  return out;
}

std::string family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::a1: return "a1";
    case RelationFamily::a2: return "a2";
    case RelationFamily::b: return "b";
    case RelationFamily::s: return "s";
  }
  return "?";
}

namespace {

void require_solution(const QuadraticSet& qs, const char* role) {
  if (!classify(qs).is_solution)
    throw PreconditionError(std::string(role) +
                            " is not a solution (nondegenerate involutive braided)");
}

// Orbit data of one factor split by the role its degree-2 words play in the
// relation families: descending words (the larger element of a nontrivial
// orbit, with its image), fixed words, ascending words.
struct OrbitSplit {
  // (j, i, i', j') with r(x_j, x_i) = (x_i', x_j') and x_j x_i descending
  std::vector<std::array<std::uint32_t, 4>> descending;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fixed;
  // (i, j) with r(x_i, x_j) deg-lex above x_i x_j
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ascending;
};

OrbitSplit split_orbits(const QuadraticSet& qs) {
  OrbitReport rep = orbit_report(qs);
  OrbitSplit split;
  split.fixed = rep.fixed_points;
  for (const auto& [big, small] : rep.nontrivial_orbits) {
    split.descending.push_back({big.first, big.second, small.first, small.second});
    split.ascending.push_back(small);
  }
  return split;
}

NcPoly binomial_relation(std::uint32_t alphabet, std::uint32_t l0, std::uint32_t l1,
                         std::uint32_t t0, std::uint32_t t1) {
  NcPoly f(alphabet);
  f.add_term(Word(alphabet, {l0, l1}), 1);
  f.add_term(Word(alphabet, {t0, t1}), -1);
  return f;
}

} // namespace

SegrePresentation segre_presentation(const QuadraticSet& a, const QuadraticSet& b) {
  require_solution(a, "first factor");
  require_solution(b, "second factor");
  SegrePresentation sp;
  sp.gens = {a.n, b.n};
  const SegreGenerators& g = sp.gens;

  OrbitSplit xs = split_orbits(a);
  OrbitSplit ys = split_orbits(b);

  // family a1: descending X-word x_j x_i with image x_i' x_j', any Y-pair
  // (b, a) with image (a', b'); relation w_jb w_ia - w_i'a' w_j'b'
  for (const auto& [j, i, ip, jp] : xs.descending) {
    // For a solution the leading letter strictly drops: j > i'. If it did
    // not, x_i would be fixed under the left action of x_j and the orbit
    // would be trivial by cancellation in the structure monoid.
    if (j <= ip)
      throw IdentityViolation("descending relation fails j > i', contradicting cancellation");
    for (std::uint32_t bv = 0; bv < b.n; ++bv)
      for (std::uint32_t av = 0; av < b.n; ++av) {
        auto [apv, bpv] = b.r(bv, av);
        TaggedRelation rel;
        rel.family = RelationFamily::a1;
        rel.source = {j, i, bv, av};
        rel.image = {ip, jp, apv, bpv};
        rel.poly = binomial_relation(g.count(), g.flat(j, bv), g.flat(i, av),
                                     g.flat(ip, apv), g.flat(jp, bpv));
        sp.re_a1.push_back(std::move(rel));
      }
  }

  // family a2: fixed X-word x_i x_j, descending Y-word y_b y_a with image
  // (a', b'); relation w_ib w_ja - w_ia' w_jb'
  for (const auto& [i, j] : xs.fixed) {
    for (const auto& [bv, av, apv, bpv] : ys.descending) {
      if (bv <= apv)
        throw IdentityViolation("descending relation fails b > a', contradicting cancellation");
      TaggedRelation rel;
      rel.family = RelationFamily::a2;
      rel.source = {i, j, bv, av};
      rel.image = {i, j, apv, bpv};
      rel.poly = binomial_relation(g.count(), g.flat(i, bv), g.flat(j, av),
                                   g.flat(i, apv), g.flat(j, bpv));
      sp.re_a2.push_back(std::move(rel));
    }
  }

  // family b: ascending X-word x_i x_j, descending Y-word y_b y_a; the
  // X-part stays put and only the Y-part rewrites
  for (const auto& [i, j] : xs.ascending) {
    for (const auto& [bv, av, apv, bpv] : ys.descending) {
      TaggedRelation rel;
      rel.family = RelationFamily::b;
      rel.source = {i, j, bv, av};
      rel.image = {i, j, apv, bpv};
      rel.poly = binomial_relation(g.count(), g.flat(i, bv), g.flat(j, av),
                                   g.flat(i, apv), g.flat(j, bpv));
      sp.re_b.push_back(std::move(rel));
    }
  }

  // duplicate guard: the three families must produce pairwise distinct
  // leading words (their X-parts are descending, fixed and ascending, which
  // are disjoint classes)
  std::set<std::pair<std::uint32_t, std::uint32_t>> lms;
  auto guard = [&](const std::vector<TaggedRelation>& family) {
    for (const TaggedRelation& rel : family) {
      const Word& lm = rel.poly.leading_monomial();
      if (!lms.insert({lm[0], lm[1]}).second)
        throw IdentityViolation("duplicate leading word across Segre relation families");
    }
  };
  guard(sp.re_a1);
  guard(sp.re_a2);
  guard(sp.re_b);
  return sp;
}

QuadraticPresentation SegrePresentation::to_presentation() const {
  QuadraticPresentation p;
  p.n_gens = gens.count();
  p.labels = gens.labels("w");
  p.relations.reserve(total());
  for (const auto* family : {&re_a1, &re_a2, &re_b})
    for (const TaggedRelation& rel : *family) p.relations.push_back(rel.poly);
  p.validate();
  return p;
}

QuadraticPresentation z_presentation(const QuadraticSet& a, const QuadraticSet& b) {
  return yb_presentation(z_solution(a, b));
}

NcPoly sigma23_left(const NcPoly& f, const Word& y_word, const SegreGenerators& gens) {
  if (f.alphabet() != gens.m || y_word.alphabet() != gens.n)
    throw PreconditionError("tensor interleaving: operand alphabets do not match the factors");
  if (!f.is_homogeneous(2) || y_word.size() != 2)
    throw PreconditionError("tensor interleaving is defined on degree-2 components");
  NcPoly out(gens.count());
  for (const auto& [w, c] : f.terms())
    out.add_term(Word(gens.count(), {gens.flat(w[0], y_word[0]), gens.flat(w[1], y_word[1])}), c);
  return out;
}

NcPoly sigma23_right(const Word& x_word, const NcPoly& g, const SegreGenerators& gens) {
  if (g.alphabet() != gens.n || x_word.alphabet() != gens.m)
    throw PreconditionError("tensor interleaving: operand alphabets do not match the factors");
  if (!g.is_homogeneous(2) || x_word.size() != 2)
    throw PreconditionError("tensor interleaving is defined on degree-2 components");
  NcPoly out(gens.count());
  for (const auto& [w, c] : g.terms())
    out.add_term(Word(gens.count(), {gens.flat(x_word[0], w[0]), gens.flat(x_word[1], w[1])}), c);
  return out;
}

void TensorElement::add(const Word& xw, const Word& yw, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({xw, yw}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string TensorElement::str(std::span<const std::string> x_labels,
                               std::span<const std::string> y_labels) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + rational_str(c) + ")*" + key.first.str(x_labels) + "(x)" +
           key.second.str(y_labels);
  }
  return out;
}

TensorElement tensor_normal_form(const NcPoly& p, const TruncatedGB& gb_a,
                                 const TruncatedGB& gb_b, const SegreGenerators& gens) {
  if (p.alphabet() != gens.count())
    throw PreconditionError("tensor normal form expects a polynomial over the w letters");
  if (gb_a.alphabet != gens.m || gb_b.alphabet != gens.n)
    throw PreconditionError("tensor normal form: factor bases do not match the generators");
  TensorElement out;
  for (const auto& [w, c] : p.terms()) {
    std::vector<std::uint32_t> xs, ys;
    xs.reserve(w.size());
    ys.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      xs.push_back(gens.x_of(w[k]));
      ys.push_back(gens.y_of(w[k]));
    }
    NcPoly nfx = normal_form(NcPoly::monomial(Word(gens.m, std::move(xs))), gb_a);
    NcPoly nfy = normal_form(NcPoly::monomial(Word(gens.n, std::move(ys))), gb_b);
    for (const auto& [u, cu] : nfx.terms())
      for (const auto& [v, cv] : nfy.terms()) out.add(u, v, c * cu * cv);
  }
  return out;
}

std::vector<TaggedRelation> kernel_generators(const QuadraticSet& a, const QuadraticSet& b) {
  require_solution(a, "first factor");
  require_solution(b, "second factor");
  SegreGenerators g{a.n, b.n};
  OrbitSplit xs = split_orbits(a);
  OrbitSplit ys = split_orbits(b);
  std::vector<TaggedRelation> out;
  // gamma_{ij,ba} = z_ib z_ja - z_ia' z_jb' over ascending X-words and
  // descending Y-words; the same index pattern as family b
  for (const auto& [i, j] : xs.ascending) {
    for (const auto& [bv, av, apv, bpv] : ys.descending) {
      TaggedRelation rel;
      rel.family = RelationFamily::s;
      rel.source = {i, j, bv, av};
      rel.image = {i, j, apv, bpv};
      rel.poly = binomial_relation(g.count(), g.flat(i, bv), g.flat(j, av),
                                   g.flat(i, apv), g.flat(j, bpv));
      out.push_back(std::move(rel));
    }
  }
  return out;
}

DimIdentityReport dim_identity_report(const QuadraticSet& a, const QuadraticSet& b) {
  SegrePresentation sp = segre_presentation(a, b);
  const std::uint32_t m = a.n, n = b.n;
  const std::uint32_t mn = m * n;

  DimIdentityReport rep;
  rep.m = m;
  rep.n = n;
  rep.count_a1 = sp.re_a1.size();
  rep.count_a2 = sp.re_a2.size();
  rep.count_b = sp.re_b.size();
  rep.count_total = sp.total();
  rep.expected_a1 = binom(m, 2) * static_cast<std::uint64_t>(n) * n;
  rep.expected_a2 = static_cast<std::uint64_t>(m) * binom(n, 2);
  rep.expected_b = binom(m, 2) * binom(n, 2);
  rep.expected_total = rep.expected_a1 + rep.expected_a2 + rep.expected_b;

  auto fail = [](const std::string& what) { throw IdentityViolation(what); };

  if (rep.count_a1 != rep.expected_a1) fail("family a1 count differs from C(m,2)n^2");
  if (rep.count_a2 != rep.expected_a2) fail("family a2 count differs from mC(n,2)");
  if (rep.count_b != rep.expected_b) fail("family b count differs from C(m,2)C(n,2)");
  if (rep.count_a1 + rep.count_a2 != binom(mn, 2))
    fail("families a1 + a2 do not total C(mn,2)");
  if (rep.count_total != binom(mn, 2) + binom(m, 2) * binom(n, 2))
    fail("relation total differs from C(mn,2) + C(m,2)C(n,2)");
  if (m >= 2 && n >= 2 && rep.count_total <= binom(mn, 2))
    fail("relation total is not strictly above C(mn,2) for m,n >= 2");

  // linear independence of the relations inside the degree-2 word space
  {
    std::vector<SparseRow> rows;
    QuadraticPresentation wp = sp.to_presentation();
    for (const NcPoly& f : wp.relations) {
      SparseRow row;
      for (const auto& [w, c] : f.terms())
        row.emplace_back(static_cast<std::uint32_t>(word_rank(w)), c);
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      rows.push_back(std::move(row));
    }
    rep.relation_rank = sparse_rank(std::move(rows));
  }
  rep.segre_dim2 = binom(m + 1, 2) * binom(n + 1, 2);
  rep.free_dim2 = static_cast<std::size_t>(mn) * mn;
  if (rep.relation_rank != rep.count_total)
    fail("Segre relations are not linearly independent in degree 2");
  if (rep.relation_rank + rep.segre_dim2 != rep.free_dim2)
    fail("|Re| + C(m+1,2)C(n+1,2) differs from (mn)^2");

  // kernel side: the images of the kernel generators span a subspace of
  // the degree-2 component of the z algebra of the predicted dimension
  std::vector<TaggedRelation> gammas = kernel_generators(a, b);
  rep.kernel_count = gammas.size();
  rep.expected_kernel_dim = binom(m, 2) * binom(n, 2);
  {
    QuadraticPresentation zp = z_presentation(a, b);
    TruncatedGB zgb = truncated_groebner(zp, 2);
    NormalMonomialSet basis2 = normal_monomials(zgb, 2);
    rep.z_dim2 = basis2.words.size();
    std::map<Word, std::uint32_t, DegLexLess> col_of;
    for (std::uint32_t k = 0; k < basis2.words.size(); ++k)
      col_of.emplace(basis2.words[k], k);
    std::vector<SparseRow> rows;
    for (const TaggedRelation& gamma : gammas) {
      NcPoly nf = normal_form(gamma.poly, zgb);
      SparseRow row;
      for (const auto& [w, c] : nf.terms()) row.emplace_back(col_of.at(w), c);
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      rows.push_back(std::move(row));
    }
    rep.kernel_rank = sparse_rank(std::move(rows));
  }
  if (rep.z_dim2 != binom(mn + 1, 2))
    fail("degree-2 dimension of the z algebra differs from C(mn+1,2)");
  if (rep.kernel_count != rep.expected_kernel_dim)
    fail("kernel generator count differs from C(m,2)C(n,2)");
  if (rep.kernel_rank != rep.expected_kernel_dim)
    fail("kernel generators do not span a space of dimension C(m,2)C(n,2)");
  if (rep.kernel_rank != binom(mn + 1, 2) - rep.segre_dim2)
    fail("kernel dimension differs from C(mn+1,2) - C(m+1,2)C(n+1,2)");
  return rep;
}

SegreHilbertReport segre_hilbert_check(const QuadraticSet& a, const QuadraticSet& b,
                                       std::uint32_t degree) {
  QuadraticPresentation wp = segre_presentation(a, b).to_presentation();
  TruncatedGB gb = truncated_groebner(wp, std::max<std::uint32_t>(degree, 2));
  SegreHilbertReport rep;
  rep.m = a.n;
  rep.n = b.n;
  rep.degree = degree;
  for (std::uint32_t d = 0; d <= degree; ++d) {
    rep.gb_dims.push_back(normal_monomials(gb, d).words.size());
    rep.oracle_dims.push_back(quotient_dim_oracle(wp, d));
    rep.expected_dims.push_back(binom(a.n + d - 1, d) * binom(b.n + d - 1, d));
    if (rep.gb_dims[d] != rep.expected_dims[d])
      throw IdentityViolation("Groebner dimension differs from C(m+d-1,d)C(n+d-1,d) at degree " +
                              std::to_string(d));
    if (rep.oracle_dims[d] != rep.expected_dims[d])
      throw IdentityViolation("oracle dimension differs from C(m+d-1,d)C(n+d-1,d) at degree " +
                              std::to_string(d));
  }
  return rep;
}

SquareFreeCertificate square_free_certificate(const QuadraticSet& a, const QuadraticSet& b) {
  PbwReport pa = pbw_check(a);
  PbwReport pb = pbw_check(b);
  if (!pa.square_free || !pb.square_free)
    throw PreconditionError("square-free certificate requires square-free factors");
  if (!pa.binomial_skew_ring || !pb.binomial_skew_ring)
    throw PreconditionError("square-free certificate requires factors whose given "
                            "enumerations are certified binomial skew polynomial rings");

  SquareFreeCertificate cert;
  cert.m = a.n;
  cert.n = b.n;
  SegrePresentation sp = segre_presentation(a, b);
  QuadraticPresentation wp = sp.to_presentation();

  cert.w_relations_groebner = is_groebner_quadratic(wp).is_groebner;
  if (!cert.w_relations_groebner)
    throw IdentityViolation("square-free Segre relations fail the quadratic Groebner test");

  std::vector<Word> lms;
  for (const NcPoly& f : wp.relations) lms.push_back(f.leading_monomial());

  // degree-2 normal words must be exactly the doubly ordered pairs
  {
    std::vector<Word> normal2 = words_avoiding(wp.n_gens, lms, 2);
    std::vector<Word> expected;
    const SegreGenerators& g = sp.gens;
    for (std::uint32_t f1 = 0; f1 < g.count(); ++f1)
      for (std::uint32_t f2 = 0; f2 < g.count(); ++f2)
        if (g.x_of(f1) <= g.x_of(f2) && g.y_of(f1) <= g.y_of(f2))
          expected.emplace_back(g.count(), std::vector<std::uint32_t>{f1, f2});
    cert.normal2_shape = normal2 == expected; // both lists are in deg-lex order
    if (!cert.normal2_shape)
      throw IdentityViolation("degree-2 normal words are not the doubly ordered monomials");
  }

  cert.normal3_count = words_avoiding(wp.n_gens, lms, 3).size();
  cert.normal3_expected = binom(cert.m + 2, 3) * binom(cert.n + 2, 3);
  if (cert.normal3_count != cert.normal3_expected)
    throw IdentityViolation("degree-3 normal word count differs from C(m+2,3)C(n+2,3)");
  if (cert.normal3_count != count_avoiding_quadratic(wp.n_gens, lms, 3))
    throw IdentityViolation("transfer-matrix count disagrees with normal word enumeration");

  // the z algebra must come out as a binomial skew polynomial ring under
  // the flattened enumeration
  PbwReport pz = pbw_check(z_solution(a, b));
  cert.z_shape_coeffs = pz.shape_coeffs;
  cert.z_shape_indices = pz.shape_indices;
  cert.z_shape_onto = pz.shape_onto;
  cert.z_relations_groebner = pz.gb.is_groebner;
  cert.z_binomial_skew_ring = pz.binomial_skew_ring;
  if (!pz.binomial_skew_ring)
    throw IdentityViolation("z algebra of a square-free pair is not a certified binomial "
                            "skew polynomial ring");
  return cert;
}

} // namespace ybsegre
