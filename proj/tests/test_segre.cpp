#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybsegre/segre.hpp"

#include "corpus.hpp"

#include <string>
#include <vector>

using namespace ybsegre;

namespace {

Word w(std::uint32_t alphabet, std::initializer_list<std::uint32_t> letters) {
  return Word(alphabet, std::vector<std::uint32_t>(letters));
}

std::vector<std::string> family_strings(const std::vector<TaggedRelation>& family,
                                        const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& rel : family) out.push_back(rel.poly.str(labels));
  return out;
}

} // namespace

TEST_CASE("generator bookkeeping for the flattened w letters") {
  SegreGenerators g{3, 2};
  CHECK(g.count() == 6);
  CHECK(g.flat(2, 1) == 5);
  CHECK(g.x_of(5) == 2);
  CHECK(g.y_of(5) == 1);
  for (std::uint32_t f = 0; f < g.count(); ++f) CHECK(g.flat(g.x_of(f), g.y_of(f)) == f);
  CHECK(g.labels("w") ==
        std::vector<std::string>{"w11", "w12", "w21", "w22", "w31", "w32"});
  CHECK(family_name(RelationFamily::a1) == "a1");
  CHECK(family_name(RelationFamily::s) == "s");
}

TEST_CASE("the order-3 by order-2 presentation is reproduced verbatim") {
  SegrePresentation sp = segre_presentation(corpus::sqfree3(), corpus::perm2());
  std::vector<std::string> labels = sp.gens.labels("w");

  CHECK(sp.re_a1.size() == 12);
  CHECK(sp.re_a2.size() == 3);
  CHECK(sp.re_b.size() == 3);
  CHECK(sp.total() == 18);

  CHECK(family_strings(sp.re_a1, labels) ==
        std::vector<std::string>{
            "w21*w11 - w12*w22", "w21*w12 - w11*w22", "w22*w11 - w12*w21",
            "w22*w12 - w11*w21", "w31*w21 - w12*w32", "w31*w22 - w11*w32",
            "w32*w21 - w12*w31", "w32*w22 - w11*w31", "w31*w11 - w22*w32",
            "w31*w12 - w21*w32", "w32*w11 - w22*w31", "w32*w12 - w21*w31"});
  CHECK(family_strings(sp.re_a2, labels) ==
        std::vector<std::string>{"w12*w12 - w11*w11", "w22*w22 - w21*w21",
                                 "w32*w32 - w31*w31"});
  CHECK(family_strings(sp.re_b, labels) ==
        std::vector<std::string>{"w12*w22 - w11*w21", "w12*w32 - w11*w31",
                                 "w22*w32 - w21*w31"});

  // index tags record where each relation came from
  CHECK(sp.re_a1[0].source == std::array<std::uint32_t, 4>{1, 0, 0, 0});
  CHECK(sp.re_a1[0].image == std::array<std::uint32_t, 4>{0, 1, 1, 1});
  CHECK(sp.re_a2[0].source == std::array<std::uint32_t, 4>{0, 0, 1, 1});
  CHECK(sp.re_a2[0].image == std::array<std::uint32_t, 4>{0, 0, 0, 0});
  CHECK(sp.re_b[0].family == RelationFamily::b);
  CHECK(sp.re_b[0].source == std::array<std::uint32_t, 4>{0, 1, 1, 1});
  CHECK(sp.re_b[0].image == std::array<std::uint32_t, 4>{0, 1, 0, 0});

  QuadraticPresentation flat = sp.to_presentation();
  CHECK(flat.n_gens == 6);
  CHECK(flat.relations.size() == 18);
  CHECK(flat.labels == labels);
}

TEST_CASE("the z presentation equals the product solution's presentation") {
  QuadraticPresentation zp = z_presentation(corpus::sqfree3(), corpus::perm2());
  CHECK(zp.n_gens == 6);
  CHECK(zp.relations.size() == 15);
  CHECK(zp.labels ==
        std::vector<std::string>{"z11", "z12", "z21", "z22", "z31", "z32"});

  QuadraticPresentation direct =
      yb_presentation(z_solution(corpus::sqfree3(), corpus::perm2()));
  CHECK(zp.relations == direct.relations);

  // one orbit spot check: r((x1,y2),(x1,y2)) = ((x1,y1),(x1,y1)) gives
  // z12 z12 - z11 z11
  CHECK(zp.relations[0].str(zp.labels) == "z12*z12 - z11*z11");
}

TEST_CASE("segre presentations refuse non-solutions") {
  QuadraticSet bad;
  bad.n = 2;
  // constant map, not even bijective
  bad.table = {{0, 0}, {0, 0}, {0, 0}, {0, 0}};
  bad.labels = QuadraticSet::default_labels(2, "x");
  bad.validate();
  CHECK_THROWS_AS(segre_presentation(bad, corpus::perm2()), PreconditionError);
  CHECK_THROWS_AS(segre_presentation(corpus::perm2(), bad), PreconditionError);
  CHECK_THROWS_AS(kernel_generators(bad, bad), PreconditionError);
}

TEST_CASE("tensor interleaving maps termwise and checks degrees") {
  SegreGenerators g{3, 2};

  // (x3x2 - x1x3) (x) y2y2 -> w32 w22 - w12 w32
  NcPoly f = NcPoly::monomial(w(3, {2, 1}));
  f.add_term(w(3, {0, 2}), -1);
  NcPoly lhs = sigma23_left(f, w(2, {1, 1}), g);
  NcPoly expect(6);
  expect.add_term(w(6, {5, 3}), 1);
  expect.add_term(w(6, {1, 5}), -1);
  CHECK(lhs == expect);

  // x1x2 (x) (y2y2 - y1y1) -> w12 w22 - w11 w21
  NcPoly gpoly = NcPoly::monomial(w(2, {1, 1}));
  gpoly.add_term(w(2, {0, 0}), -1);
  NcPoly rhs = sigma23_right(w(3, {0, 1}), gpoly, g);
  NcPoly expect2(6);
  expect2.add_term(w(6, {1, 3}), 1);
  expect2.add_term(w(6, {0, 2}), -1);
  CHECK(rhs == expect2);

  CHECK_THROWS_AS(sigma23_left(NcPoly::monomial(w(3, {2})), w(2, {1, 1}), g),
                  PreconditionError);
  CHECK_THROWS_AS(sigma23_left(f, w(2, {1, 1, 0}), g), PreconditionError);
  CHECK_THROWS_AS(sigma23_right(w(3, {0}), gpoly, g), PreconditionError);
  // alphabet mismatch: y word over the wrong alphabet
  CHECK_THROWS_AS(sigma23_left(f, w(3, {1, 1}), g), PreconditionError);
}

TEST_CASE("every defining relation vanishes in the tensor algebra") {
  QuadraticSet a = corpus::sqfree3();
  QuadraticSet b = corpus::perm2();
  SegrePresentation sp = segre_presentation(a, b);
  TruncatedGB gb_a = truncated_groebner(yb_presentation(a), 3);
  TruncatedGB gb_b = truncated_groebner(yb_presentation(b), 3);

  for (const auto* family : {&sp.re_a1, &sp.re_a2, &sp.re_b})
    for (const TaggedRelation& rel : *family)
      CHECK(tensor_normal_form(rel.poly, gb_a, gb_b, sp.gens).is_zero());

  // the z relations, read as w polynomials, are consequences as well
  for (const NcPoly& rel : z_presentation(a, b).relations)
    CHECK(tensor_normal_form(rel, gb_a, gb_b, sp.gens).is_zero());

  // while an ordinary monomial survives
  TensorElement nf = tensor_normal_form(NcPoly::monomial(w(6, {0, 0})), gb_a, gb_b, sp.gens);
  CHECK_FALSE(nf.is_zero());
  CHECK(nf.str(a.labels, b.labels) == "(1)*x1*x1(x)y1*y1");
}

TEST_CASE("kernel generators vanish under the Segre map but not in the z algebra") {
  QuadraticSet a = corpus::sqfree3();
  QuadraticSet b = corpus::perm2();
  std::vector<TaggedRelation> gamma = kernel_generators(a, b);
  std::vector<std::string> z_labels = z_solution(a, b).labels;

  REQUIRE(gamma.size() == 3);
  CHECK(family_strings(gamma, z_labels) ==
        std::vector<std::string>{"z12*z22 - z11*z21", "z12*z32 - z11*z31",
                                 "z22*z32 - z21*z31"});
  for (const auto& rel : gamma) CHECK(rel.family == RelationFamily::s);

  SegreGenerators g{3, 2};
  TruncatedGB gb_a = truncated_groebner(yb_presentation(a), 3);
  TruncatedGB gb_b = truncated_groebner(yb_presentation(b), 3);
  TruncatedGB gb_z = truncated_groebner(z_presentation(a, b), 2);
  for (const TaggedRelation& rel : gamma) {
    CHECK(tensor_normal_form(rel.poly, gb_a, gb_b, g).is_zero());
    CHECK_FALSE(normal_form(rel.poly, gb_z).is_zero());
  }
}

TEST_CASE("counting and dimension identities hold for the golden pair") {
  DimIdentityReport rep = dim_identity_report(corpus::sqfree3(), corpus::perm2());
  CHECK(rep.m == 3);
  CHECK(rep.n == 2);
  CHECK(rep.count_a1 == 12);
  CHECK(rep.count_a2 == 3);
  CHECK(rep.count_b == 3);
  CHECK(rep.count_total == 18);
  CHECK(rep.expected_total == 18);
  CHECK(rep.relation_rank == 18);
  CHECK(rep.segre_dim2 == 18);
  CHECK(rep.free_dim2 == 36);
  CHECK(rep.kernel_count == 3);
  CHECK(rep.kernel_rank == 3);
  CHECK(rep.z_dim2 == 21);
  CHECK(rep.expected_kernel_dim == 3);
}

TEST_CASE("identities hold with the factors swapped and for other small pairs") {
  DimIdentityReport rep = dim_identity_report(corpus::perm2(), corpus::sqfree3());
  CHECK(rep.count_a1 == 9);
  CHECK(rep.count_a2 == 6);
  CHECK(rep.count_b == 3);
  CHECK(rep.count_total == 18);
  CHECK(rep.relation_rank == 18);
  CHECK(rep.kernel_rank == 3);

  DimIdentityReport ff = dim_identity_report(QuadraticSet::flip(2), QuadraticSet::flip(2));
  CHECK(ff.count_a1 == 4);
  CHECK(ff.count_a2 == 2);
  CHECK(ff.count_b == 1);
  CHECK(ff.count_total == 7);
  CHECK(ff.z_dim2 == 10);
  CHECK(ff.segre_dim2 == 9);
  CHECK(ff.kernel_rank == 1);

  // order-1 factors produce no a1 or b relations at all
  DimIdentityReport one = dim_identity_report(QuadraticSet::flip(1), corpus::sqfree3());
  CHECK(one.count_a1 == 0);
  CHECK(one.count_a2 == 3);
  CHECK(one.count_b == 0);
  CHECK(one.kernel_count == 0);
}

TEST_CASE("per-degree dimensions match the binomial products") {
  SegreHilbertReport rep = segre_hilbert_check(corpus::sqfree3(), corpus::perm2(), 3);
  CHECK(rep.gb_dims == std::vector<std::size_t>{1, 6, 18, 40});
  CHECK(rep.oracle_dims == rep.gb_dims);
  CHECK(rep.expected_dims == rep.gb_dims);

  SegreHilbertReport sw = segre_hilbert_check(corpus::perm2(), corpus::sqfree3(), 3);
  CHECK(sw.gb_dims == std::vector<std::size_t>{1, 6, 18, 40});

  SegreHilbertReport ff = segre_hilbert_check(QuadraticSet::flip(2), QuadraticSet::flip(2), 4);
  CHECK(ff.gb_dims == std::vector<std::size_t>{1, 4, 9, 16, 25});
}

TEST_CASE("the square-free certificate accepts square-free pairs only") {
  QuadraticSet fl2 = QuadraticSet::flip(2);
  SquareFreeCertificate cert = square_free_certificate(corpus::sqfree3(), fl2);
  CHECK(cert.m == 3);
  CHECK(cert.n == 2);
  CHECK(cert.w_relations_groebner);
  CHECK(cert.normal2_shape);
  CHECK(cert.normal3_count == 40);
  CHECK(cert.normal3_expected == 40);
  CHECK(cert.z_shape_coeffs);
  CHECK(cert.z_shape_indices);
  CHECK(cert.z_shape_onto);
  CHECK(cert.z_relations_groebner);
  CHECK(cert.z_binomial_skew_ring);

  SquareFreeCertificate ff = square_free_certificate(fl2, fl2);
  CHECK(ff.w_relations_groebner);
  CHECK(ff.normal3_count == 16);

  // the transposition solution is not square-free, so no certificate
  CHECK_THROWS_AS(square_free_certificate(corpus::sqfree3(), corpus::perm2()),
                  PreconditionError);
  CHECK_THROWS_AS(square_free_certificate(corpus::perm2(), fl2), PreconditionError);
}
