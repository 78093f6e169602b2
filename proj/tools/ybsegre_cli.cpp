// Command line front end: loads solution documents, builds presentations,
// Segre products, kernels and certificates, and prints text or JSON
// reports. Exit codes: 0 success, 1 validation or precondition failure,
// 2 a certified identity failed at runtime (an internal bug, not bad input).

#include "ybsegre/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ybsegre;

namespace {

struct RunConfig {
  std::uint32_t degree = 3;
  bool as_json = false;
  bool with_pbw = false;
  std::string output_path; // empty: stdout
};

void emit(const RunConfig& cfg, const json& doc, const std::string& text) {
  std::string payload = cfg.as_json ? doc.dump(2) + "\n" : text;
  if (cfg.output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw ValidationError("cannot write " + cfg.output_path);
  out << payload;
}

std::string bool_word(bool b) { return b ? "yes" : "no"; }

std::string classification_text(const SolutionClassification& c) {
  std::ostringstream os;
  os << "bijective: " << bool_word(c.is_bijective) << "\n"
     << "braided: " << bool_word(c.is_braided) << "\n"
     << "involutive: " << bool_word(c.is_involutive) << "\n"
     << "nondegenerate: " << bool_word(c.is_nondegenerate) << "\n"
     << "square_free: " << bool_word(c.is_square_free) << "\n"
     << "solution: " << bool_word(c.is_solution) << "\n";
  return os.str();
}

std::string orbit_text(const OrbitReport& rep, const QuadraticSet& qs) {
  std::ostringstream os;
  os << "fixed points (" << rep.fixed_point_count() << "):";
  for (const auto& [i, j] : rep.fixed_points)
    os << " (" << qs.labels[i] << "," << qs.labels[j] << ")";
  os << "\nnontrivial orbits (" << rep.nontrivial_orbit_count() << "):";
  for (const auto& [big, small] : rep.nontrivial_orbits)
    os << " {" << qs.labels[big.first] << qs.labels[big.second] << " <-> "
       << qs.labels[small.first] << qs.labels[small.second] << "}";
  os << "\norbit count: " << rep.orbit_count() << "\n";
  return os.str();
}

std::string presentation_text(const QuadraticPresentation& p) {
  std::ostringstream os;
  os << "generators (" << p.n_gens << "):";
  for (const auto& l : p.labels) os << " " << l;
  os << "\nrelations (" << p.relations.size() << "):\n";
  for (const NcPoly& f : p.relations) os << "  " << f.str(p.labels) << "\n";
  return os.str();
}

std::string pbw_text(const PbwReport& rep, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "square_free: " << bool_word(rep.square_free) << "\n"
     << "quadratic_groebner: " << bool_word(rep.gb.is_groebner) << "\n";
  if (rep.gb.witness) os << "witness_overlap: " << rep.gb.witness->str(labels) << "\n";
  os << "shape_coeffs: " << bool_word(rep.shape_coeffs) << "\n"
     << "shape_indices: " << bool_word(rep.shape_indices) << "\n"
     << "shape_onto: " << bool_word(rep.shape_onto) << "\n"
     << "binomial_skew_ring: " << bool_word(rep.binomial_skew_ring) << "\n"
     << "discrepancy: " << bool_word(rep.discrepancy) << "\n";
  return os.str();
}

int run_verify(const RunConfig& cfg, const std::string& path) {
  QuadraticSet qs = load_solution(path);
  SolutionClassification c = classify(qs);
  json doc = solution_to_json(qs);
  doc["classification"] = classification_to_json(c);
  std::ostringstream text;
  text << "order: " << qs.n << "\n" << classification_text(c);
  if (c.is_involutive) {
    OrbitReport rep = orbit_report(qs);
    doc["orbits"] = orbit_report_to_json(rep);
    text << orbit_text(rep, qs);
  }
  emit(cfg, doc, text.str());
  return 0;
}

int run_present(const RunConfig& cfg, const std::string& path) {
  QuadraticSet qs = load_solution(path);
  QuadraticPresentation pres = yb_presentation(qs);
  json doc = presentation_to_json(pres);
  std::ostringstream text;
  text << presentation_text(pres);
  if (cfg.with_pbw) {
    PbwReport rep = pbw_check(qs);
    doc["pbw"] = pbw_report_to_json(rep);
    text << pbw_text(rep, pres.labels);
  }
  emit(cfg, doc, text.str());
  return 0;
}

int run_hilbert(const RunConfig& cfg, const std::string& path) {
  QuadraticSet qs = load_solution(path);
  QuadraticPresentation pres = yb_presentation(qs);
  TruncatedGB gb = truncated_groebner(pres, std::max<std::uint32_t>(cfg.degree, 2));
  std::vector<std::size_t> dims = hilbert_function(gb, cfg.degree);
  std::vector<std::size_t> oracle;
  for (std::uint32_t d = 0; d <= cfg.degree; ++d) oracle.push_back(quotient_dim_oracle(pres, d));
  for (std::uint32_t d = 0; d <= cfg.degree; ++d)
    if (dims[d] != oracle[d])
      throw IdentityViolation("Groebner and oracle dimensions disagree at degree " +
                              std::to_string(d));
  const bool is_sol = classify(qs).is_solution;
  std::vector<std::size_t> expected;
  if (is_sol) {
    for (std::uint32_t d = 0; d <= cfg.degree; ++d)
      expected.push_back(binom(qs.n + d - 1, d));
    for (std::uint32_t d = 0; d <= cfg.degree; ++d)
      if (dims[d] != expected[d])
        throw IdentityViolation("solution dimensions differ from C(n+d-1,d) at degree " +
                                std::to_string(d));
  }

  json doc{{"degree", cfg.degree},
           {"groebner_basis", gb_to_json(gb, pres.labels)},
           {"dimensions", dims},
           {"oracle_dimensions", oracle}};
  if (is_sol) doc["expected_dimensions"] = expected;
  std::ostringstream text;
  text << "truncation degree: " << cfg.degree << "\n"
       << "groebner basis (" << gb.basis.size() << " elements, complete through "
       << gb.complete_through << "):\n";
  for (const NcPoly& g : gb.basis) text << "  " << g.str(pres.labels) << "\n";
  text << "dimensions:";
  for (std::size_t v : dims) text << " " << v;
  text << "\noracle dimensions:";
  for (std::size_t v : oracle) text << " " << v;
  text << "\n";
  if (is_sol) {
    text << "expected C(n+d-1,d):";
    for (std::size_t v : expected) text << " " << v;
    text << "\n";
  }
  emit(cfg, doc, text.str());
  return 0;
}

int run_product(const RunConfig& cfg, const std::string& path_a, const std::string& path_b) {
  QuadraticSet prod = cartesian_product(load_solution(path_a), load_solution(path_b));
  json doc = solution_to_json(prod);
  std::ostringstream text;
  text << "product order: " << prod.n << "\n" << doc.dump(2) << "\n";
  emit(cfg, doc, text.str());
  return 0;
}

int run_segre(const RunConfig& cfg, const std::string& path_a, const std::string& path_b) {
  QuadraticSet a = load_solution(path_a), b = load_solution(path_b);
  SegrePresentation sp = segre_presentation(a, b);
  DimIdentityReport rep = dim_identity_report(a, b);
  SegreHilbertReport hil = segre_hilbert_check(a, b, cfg.degree);
  json doc = segre_presentation_to_json(sp);
  doc["identities"] = dim_identity_report_to_json(rep);
  doc["hilbert"] = segre_hilbert_report_to_json(hil);

  std::vector<std::string> labels = sp.gens.labels("w");
  std::ostringstream text;
  text << "segre presentation on " << sp.gens.count() << " generators\n"
       << "family sizes: a1 " << rep.count_a1 << ", a2 " << rep.count_a2 << ", b " << rep.count_b
       << ", total " << rep.count_total << "\n";
  auto print_family = [&](const char* name, const std::vector<TaggedRelation>& rels) {
    text << name << ":\n";
    for (const TaggedRelation& rel : rels) text << "  " << rel.poly.str(labels) << "\n";
  };
  print_family("a1", sp.re_a1);
  print_family("a2", sp.re_a2);
  print_family("b", sp.re_b);
  text << "identity |Re| + C(m+1,2)C(n+1,2) = (mn)^2: " << rep.count_total << " + "
       << rep.segre_dim2 << " = " << rep.free_dim2 << "\n"
       << "identity dim K_2 = C(mn+1,2) - C(m+1,2)C(n+1,2) = C(m,2)C(n,2): " << rep.kernel_rank
       << " = " << rep.z_dim2 << " - " << rep.segre_dim2 << " = " << rep.expected_kernel_dim
       << "\n";
  text << "hilbert (degree " << hil.degree << "):";
  for (std::size_t v : hil.gb_dims) text << " " << v;
  text << "\n";
  emit(cfg, doc, text.str());
  return 0;
}

int run_zalg(const RunConfig& cfg, const std::string& path_a, const std::string& path_b) {
  QuadraticSet a = load_solution(path_a), b = load_solution(path_b);
  QuadraticPresentation pres = z_presentation(a, b);
  json doc = presentation_to_json(pres);
  std::ostringstream text;
  text << presentation_text(pres);
  if (cfg.with_pbw) {
    PbwReport rep = pbw_check(z_solution(a, b));
    doc["pbw"] = pbw_report_to_json(rep);
    text << pbw_text(rep, pres.labels);
  }
  emit(cfg, doc, text.str());
  return 0;
}

int run_kernel(const RunConfig& cfg, const std::string& path_a, const std::string& path_b) {
  QuadraticSet a = load_solution(path_a), b = load_solution(path_b);
  std::vector<TaggedRelation> gammas = kernel_generators(a, b);
  SegreGenerators gens{a.n, b.n};

  // soundness: each generator vanishes under the Segre map (its w-image is
  // zero in the tensor algebra) and is nonzero in the z algebra
  TruncatedGB gb_a = truncated_groebner(yb_presentation(a), 2);
  TruncatedGB gb_b = truncated_groebner(yb_presentation(b), 2);
  TruncatedGB gb_z = truncated_groebner(z_presentation(a, b), 2);
  for (const TaggedRelation& gamma : gammas) {
    // the map sends z_ia to w_ia, so the w-image has the same letters
    if (!tensor_normal_form(gamma.poly, gb_a, gb_b, gens).is_zero())
      throw IdentityViolation("kernel generator does not vanish under the Segre map");
    if (normal_form(gamma.poly, gb_z).is_zero())
      throw IdentityViolation("kernel generator vanishes in the z algebra");
  }

  std::vector<std::string> labels = gens.labels("z");
  json rels = json::array();
  for (const TaggedRelation& gamma : gammas) rels.push_back(tagged_relation_to_json(gamma, labels));
  json doc{{"m", a.n},
           {"n", b.n},
           {"generators", labels},
           {"kernel", std::move(rels)},
           {"count", gammas.size()},
           {"soundness", json{{"all_vanish_under_segre_map", true},
                              {"all_nonzero_in_z_algebra", true}}}};
  std::ostringstream text;
  text << "kernel generators (" << gammas.size() << "):\n";
  for (const TaggedRelation& gamma : gammas) text << "  " << gamma.poly.str(labels) << "\n";
  text << "all vanish under the Segre map: yes\nall nonzero in the z algebra: yes\n";
  emit(cfg, doc, text.str());
  return 0;
}

int run_certify(const RunConfig& cfg, const std::string& path_a, const std::string& path_b) {
  QuadraticSet a = load_solution(path_a), b = load_solution(path_b);
  SquareFreeCertificate cert = square_free_certificate(a, b);
  json doc = square_free_certificate_to_json(cert);
  std::ostringstream text;
  text << "square-free certificate for orders " << cert.m << " and " << cert.n << "\n"
       << "w relations are a quadratic groebner basis: " << bool_word(cert.w_relations_groebner)
       << "\n"
       << "degree-2 normal words are the doubly ordered monomials: "
       << bool_word(cert.normal2_shape) << "\n"
       << "degree-3 normal words: " << cert.normal3_count << " (expected "
       << cert.normal3_expected << ")\n"
       << "z algebra is a binomial skew polynomial ring: "
       << bool_word(cert.z_binomial_skew_ring) << "\n";
  emit(cfg, doc, text.str());
  return 0;
}

int run_enumerate(const RunConfig& cfg, std::uint32_t order) {
  std::vector<QuadraticSet> sols = enumerate_solutions(order);
  json list = json::array();
  for (const QuadraticSet& qs : sols) list.push_back(solution_to_json(qs));
  json doc{{"order", order}, {"count", sols.size()}, {"solutions", std::move(list)}};
  std::ostringstream text;
  text << "solutions of order " << order << ": " << sols.size() << "\n";
  std::size_t square_free = 0;
  for (const QuadraticSet& qs : sols)
    if (classify(qs).is_square_free) ++square_free;
  text << "square-free among them: " << square_free << "\n";
  doc["square_free_count"] = square_free;
  emit(cfg, doc, text.str());
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadratic algebras of set-theoretic Yang-Baxter solutions: presentations, "
               "Segre products, Segre maps and exact certification"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_flag("--json", cfg.as_json, "emit JSON instead of text");
  app.add_option("--output", cfg.output_path, "write the report to a file instead of stdout");
  app.add_option("--degree", cfg.degree, "truncation degree for Groebner and Hilbert data")
      ->check(CLI::Range(0u, 12u));

  std::string in_a, in_b;
  std::uint32_t order = 1;

  CLI::App* verify = app.add_subcommand("verify", "classify a solution document and list orbits");
  verify->add_option("input", in_a, "solution JSON document")->required();

  CLI::App* present =
      app.add_subcommand("present", "quadratic presentation of the Yang-Baxter algebra");
  present->add_option("input", in_a, "solution JSON document")->required();
  present->add_flag("--pbw", cfg.with_pbw, "include the PBW / binomial skew ring report");

  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "truncated Groebner basis and dimensions, cross-checked by the oracle");
  hilbert->add_option("input", in_a, "solution JSON document")->required();

  CLI::App* product = app.add_subcommand("product", "cartesian product of two solutions");
  product->add_option("first", in_a, "first factor")->required();
  product->add_option("second", in_b, "second factor")->required();

  CLI::App* segre = app.add_subcommand(
      "segre", "Segre product presentation, counting identities and dimensions");
  segre->add_option("first", in_a, "first factor")->required();
  segre->add_option("second", in_b, "second factor")->required();

  CLI::App* zalg = app.add_subcommand("zalg", "presentation of the product solution's algebra");
  zalg->add_option("first", in_a, "first factor")->required();
  zalg->add_option("second", in_b, "second factor")->required();
  zalg->add_flag("--pbw", cfg.with_pbw, "include the PBW / binomial skew ring report");

  CLI::App* kernel =
      app.add_subcommand("kernel", "Segre map kernel generators with soundness checks");
  kernel->add_option("first", in_a, "first factor")->required();
  kernel->add_option("second", in_b, "second factor")->required();

  CLI::App* certify = app.add_subcommand(
      "certify-squarefree", "certify the square-free Segre product Groebner and PBW facts");
  certify->add_option("first", in_a, "first factor")->required();
  certify->add_option("second", in_b, "second factor")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "all labelled solutions of small order");
  enumerate->add_option("order", order, "set size (1 to 4)")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (verify->parsed()) return run_verify(cfg, in_a);
    if (present->parsed()) return run_present(cfg, in_a);
    if (hilbert->parsed()) return run_hilbert(cfg, in_a);
    if (product->parsed()) return run_product(cfg, in_a, in_b);
    if (segre->parsed()) return run_segre(cfg, in_a, in_b);
    if (zalg->parsed()) return run_zalg(cfg, in_a, in_b);
    if (kernel->parsed()) return run_kernel(cfg, in_a, in_b);
    if (certify->parsed()) return run_certify(cfg, in_a, in_b);
    if (enumerate->parsed()) return run_enumerate(cfg, order);
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violation (internal bug): " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
