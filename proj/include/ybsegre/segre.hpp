#pragma once

#include "ybsegre/groebner.hpp"
#include "ybsegre/ncpoly.hpp"
#include "ybsegre/solution.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ybsegre {

// Generators w_{ia} of the Segre product presentation for factors of orders
// m and n, flattened by (i, a) -> i*n + a. Display labels are 1-based:
// w11, w12, .., w{m}{n}.
struct SegreGenerators {
  std::uint32_t m = 0;
  std::uint32_t n = 0;

  std::uint32_t flat(std::uint32_t i, std::uint32_t a) const { return i * n + a; }
  std::uint32_t x_of(std::uint32_t f) const { return f / n; }
  std::uint32_t y_of(std::uint32_t f) const { return f % n; }
  std::uint32_t count() const { return m * n; }

  std::vector<std::string> labels(const std::string& stem) const;
};

// Which defining family a Segre relation belongs to. Families a1 and a2
// rewrite a pair through one factor's action; family b relates two fixed
// normal shapes; family s is the Segre-map kernel shape on the z letters.
enum class RelationFamily { a1, a2, b, s };

std::string family_name(RelationFamily f);

// One quadratic binomial relation together with the index data it came
// from, so emitted presentations can be audited against the construction.
struct TaggedRelation {
  RelationFamily family = RelationFamily::a1;
  // For a1: (j, i, b, a) with the X-part of the leading word descending.
  // For a2 / b / s: (i, j, b, a) with x_i x_j fixed (a2) or ascending (b, s)
  // and the Y-part descending.
  std::array<std::uint32_t, 4> source{};
  // Images used: (i', j', a', b') with r1(x.., x..) = (x_i', x_j') and
  // r2(y_b, y_a) = (y_a', y_b'). For a2 the X-part is its own image.
  std::array<std::uint32_t, 4> image{};
  NcPoly poly{0};
};

// The quadratic presentation of the Segre product of the two Yang-Baxter
// algebras: mn generators w_{ia} and the three relation families. Sizes
// obey |a1| = C(m,2) n^2, |a2| = m C(n,2), |b| = C(m,2) C(n,2).
struct SegrePresentation {
  SegreGenerators gens;
  std::vector<TaggedRelation> re_a1;
  std::vector<TaggedRelation> re_a2;
  std::vector<TaggedRelation> re_b;

  std::size_t total() const { return re_a1.size() + re_a2.size() + re_b.size(); }
  // Flatten to a plain presentation, families in order a1, a2, b.
  QuadraticPresentation to_presentation() const;
};

// Requires both inputs to be solutions (PreconditionError otherwise).
SegrePresentation segre_presentation(const QuadraticSet& a, const QuadraticSet& b);

// Presentation of the Yang-Baxter algebra of the product solution on the z
// generators; equals yb_presentation(z_solution(a, b)).
QuadraticPresentation z_presentation(const QuadraticSet& a, const QuadraticSet& b);

// The degree-2 component of the map that interleaves tensor factors:
// sends f (x) y_c y_d, with f a degree-2 polynomial in the x letters, to
// the w-polynomial obtained termwise by x_p x_q -> w_{pc} w_{qd}.
NcPoly sigma23_left(const NcPoly& f, const Word& y_word, const SegreGenerators& gens);
// Symmetric variant: x_p x_q (x) g with g a degree-2 polynomial in the y
// letters, sent termwise by y_c y_d -> w_{pc} w_{qd}.
NcPoly sigma23_right(const Word& x_word, const NcPoly& g, const SegreGenerators& gens);

// Element of the tensor algebra A (x) B in the monomial basis: pairs of an
// x word and a y word of equal length, with rational coefficients.
class TensorElement {
public:
  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      int c = compare_deglex(a.first, b.first);
      if (c != 0) return c < 0;
      return compare_deglex(a.second, b.second) < 0;
    }
  };
  using TermMap = std::map<Key, Rational, KeyLess>;

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  void add(const Word& xw, const Word& yw, const Rational& c);

  std::string str(std::span<const std::string> x_labels,
                  std::span<const std::string> y_labels) const;

private:
  TermMap terms_;
};

// Image in A (x) B of a homogeneous w-polynomial: each w word splits into
// its x word and y word, each component is reduced to normal form modulo
// the factor's Groebner basis, and the products are collected. The result
// is zero exactly when the element vanishes in A (x) B. Degrees must be
// within both bases' certified truncation.
TensorElement tensor_normal_form(const NcPoly& p, const TruncatedGB& gb_a,
                                 const TruncatedGB& gb_b, const SegreGenerators& gens);

// Generators of the kernel of the Segre map in degree 2, as z-polynomials
// gamma = z_ib z_ja - z_ia' z_jb' over ascending nonfixed x_i x_j and
// descending nontrivial y_b y_a. Exactly C(m,2) C(n,2) of them.
std::vector<TaggedRelation> kernel_generators(const QuadraticSet& a, const QuadraticSet& b);

// The counting and dimension identities for one Segre presentation. Every
// field is computed from the constructed objects; `expected` fields come
// from the closed formulas. Throws IdentityViolation when anything
// disagrees, since these identities are theorems.
struct DimIdentityReport {
  std::uint32_t m = 0, n = 0;
  // family sizes
  std::size_t count_a1 = 0, count_a2 = 0, count_b = 0, count_total = 0;
  std::size_t expected_a1 = 0, expected_a2 = 0, expected_b = 0, expected_total = 0;
  // |Re| + C(m+1,2) C(n+1,2) = (mn)^2
  std::size_t relation_rank = 0;       // rank of the degree-2 span of Re
  std::size_t segre_dim2 = 0;          // C(m+1,2) C(n+1,2)
  std::size_t free_dim2 = 0;           // (mn)^2
  // dim K_2 = C(mn+1,2) - C(m+1,2) C(n+1,2) = C(m,2) C(n,2)
  std::size_t kernel_count = 0;        // |Re_s|
  std::size_t kernel_rank = 0;         // rank of the images of Re_s in (A_Z)_2
  std::size_t z_dim2 = 0;              // C(mn+1,2), the degree-2 dim of A_Z
  std::size_t expected_kernel_dim = 0; // C(m,2) C(n,2)
};

DimIdentityReport dim_identity_report(const QuadraticSet& a, const QuadraticSet& b);

// Per-degree dimension check of the Segre presentation quotient against
// C(m+d-1, d) C(n+d-1, d), by both the truncated Groebner route and the
// linear-algebra oracle. Throws IdentityViolation on any mismatch.
struct SegreHilbertReport {
  std::uint32_t m = 0, n = 0, degree = 0;
  std::vector<std::size_t> gb_dims;       // d = 0..degree
  std::vector<std::size_t> oracle_dims;   // d = 0..degree
  std::vector<std::size_t> expected_dims; // binomial products
};

SegreHilbertReport segre_hilbert_check(const QuadraticSet& a, const QuadraticSet& b,
                                       std::uint32_t degree);

// Certification available only in the square-free case: both factors must
// be square-free solutions whose given enumerations pass pbw_check
// (PreconditionError otherwise). Certifies that the Segre relations are
// already a Groebner basis, that the degree-2 and degree-3 normal words
// have the predicted shape and count, and that the z presentation is a
// binomial skew polynomial ring. Throws IdentityViolation if any certified
// fact fails, since that would contradict the square-free theorems.
struct SquareFreeCertificate {
  std::uint32_t m = 0, n = 0;
  bool w_relations_groebner = false;
  bool normal2_shape = false;  // N(Re)_2 = { w_ia w_jb : i <= j, a <= b }
  std::size_t normal3_count = 0;
  std::size_t normal3_expected = 0;
  bool z_shape_coeffs = false;
  bool z_shape_indices = false;
  bool z_shape_onto = false;
  bool z_relations_groebner = false;
  bool z_binomial_skew_ring = false;
};

SquareFreeCertificate square_free_certificate(const QuadraticSet& a, const QuadraticSet& b);

} // namespace ybsegre
