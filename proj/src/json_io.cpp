#include "ybsegre/json_io.hpp"

#include <fstream>

namespace ybsegre {

QuadraticSet solution_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("solution document must be a JSON object");
  if (!doc.contains("size") || !doc["size"].is_number_unsigned())
    throw ValidationError("solution document needs an unsigned \"size\"");
  QuadraticSet qs;
  qs.n = doc["size"].get<std::uint32_t>();
  if (qs.n == 0) throw ValidationError("solution size must be positive");

  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      throw ValidationError("\"labels\" must be an array of strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw ValidationError("\"labels\" must be an array of strings");
      qs.labels.push_back(l.get<std::string>());
    }
  } else {
    qs.labels = QuadraticSet::default_labels(qs.n, "x");
  }

  if (!doc.contains("r") || !doc["r"].is_array() || doc["r"].size() != qs.n)
    throw ValidationError("\"r\" must be an array of " + std::to_string(qs.n) + " rows");
  for (const auto& row : doc["r"]) {
    if (!row.is_array() || row.size() != qs.n)
      throw ValidationError("non-square r table: every row needs " + std::to_string(qs.n) +
                            " entries");
    for (const auto& entry : row) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer() || entry[0].get<std::int64_t>() < 0 ||
          entry[1].get<std::int64_t>() < 0)
        throw ValidationError("every r entry must be a pair [p, q] of unsigned indices");
      std::uint64_t p = entry[0].get<std::uint64_t>();
      std::uint64_t q = entry[1].get<std::uint64_t>();
      if (p >= qs.n || q >= qs.n) throw ValidationError("index out of range in r table");
      qs.table.emplace_back(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q));
    }
  }
  qs.validate();
  return qs;
}

QuadraticSet load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
  return solution_from_json(doc);
}

json solution_to_json(const QuadraticSet& qs) {
  json rows = json::array();
  for (std::uint32_t i = 0; i < qs.n; ++i) {
    json row = json::array();
    for (std::uint32_t j = 0; j < qs.n; ++j) {
      auto [p, q] = qs.r(i, j);
      row.push_back(json::array({p, q}));
    }
    rows.push_back(std::move(row));
  }
  return json{{"size", qs.n}, {"labels", qs.labels}, {"r", std::move(rows)}};
}

json poly_to_json(const NcPoly& p) {
  json terms = json::array();
  // leading term first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json letters = json::array();
    for (std::uint32_t c : it->first.letters()) letters.push_back(c);
    terms.push_back(json::array({rational_str(it->second), std::move(letters)}));
  }
  return terms;
}

json presentation_to_json(const QuadraticPresentation& p) {
  json rels = json::array();
  for (const NcPoly& f : p.relations) rels.push_back(poly_to_json(f));
  json pretty = json::array();
  for (const NcPoly& f : p.relations) pretty.push_back(f.str(p.labels));
  return json{{"generators", p.labels},
              {"relations", std::move(rels)},
              {"relations_pretty", std::move(pretty)},
              {"relation_count", p.relations.size()}};
}

json gb_to_json(const TruncatedGB& gb, const std::vector<std::string>& labels) {
  json elems = json::array();
  json pretty = json::array();
  for (const NcPoly& g : gb.basis) {
    elems.push_back(poly_to_json(g));
    pretty.push_back(g.str(labels));
  }
  return json{{"generators", labels},
              {"elements", std::move(elems)},
              {"elements_pretty", std::move(pretty)},
              {"element_count", gb.basis.size()},
              {"truncation_degree", gb.truncation_degree},
              {"complete_through", gb.complete_through}};
}

json classification_to_json(const SolutionClassification& c) {
  return json{{"is_bijective", c.is_bijective},     {"is_braided", c.is_braided},
              {"is_involutive", c.is_involutive},   {"is_nondegenerate", c.is_nondegenerate},
              {"is_square_free", c.is_square_free}, {"is_solution", c.is_solution}};
}

json orbit_report_to_json(const OrbitReport& rep) {
  json fixed = json::array();
  for (const auto& [i, j] : rep.fixed_points) fixed.push_back(json::array({i, j}));
  json orbits = json::array();
  for (const auto& [big, small] : rep.nontrivial_orbits)
    orbits.push_back(json::array({json::array({big.first, big.second}),
                                  json::array({small.first, small.second})}));
  return json{{"fixed_points", std::move(fixed)},
              {"nontrivial_orbits", std::move(orbits)},
              {"fixed_point_count", rep.fixed_point_count()},
              {"nontrivial_orbit_count", rep.nontrivial_orbit_count()},
              {"orbit_count", rep.orbit_count()}};
}

json tagged_relation_to_json(const TaggedRelation& rel, const std::vector<std::string>& labels) {
  return json{{"family", family_name(rel.family)},
              {"source", json::array({rel.source[0], rel.source[1], rel.source[2], rel.source[3]})},
              {"image", json::array({rel.image[0], rel.image[1], rel.image[2], rel.image[3]})},
              {"relation", poly_to_json(rel.poly)},
              {"relation_pretty", rel.poly.str(labels)}};
}

json segre_presentation_to_json(const SegrePresentation& sp) {
  std::vector<std::string> labels = sp.gens.labels("w");
  auto family = [&](const std::vector<TaggedRelation>& rels) {
    json out = json::array();
    for (const TaggedRelation& rel : rels) out.push_back(tagged_relation_to_json(rel, labels));
    return out;
  };
  return json{{"m", sp.gens.m},
              {"n", sp.gens.n},
              {"generators", labels},
              {"families", json{{"a1", family(sp.re_a1)},
                                {"a2", family(sp.re_a2)},
                                {"b", family(sp.re_b)}}},
              {"counts", json{{"a1", sp.re_a1.size()},
                              {"a2", sp.re_a2.size()},
                              {"b", sp.re_b.size()},
                              {"total", sp.total()}}}};
}

json dim_identity_report_to_json(const DimIdentityReport& rep) {
  return json{{"m", rep.m},
              {"n", rep.n},
              {"counts", json{{"a1", rep.count_a1},
                              {"a2", rep.count_a2},
                              {"b", rep.count_b},
                              {"total", rep.count_total}}},
              {"expected_counts", json{{"a1", rep.expected_a1},
                                       {"a2", rep.expected_a2},
                                       {"b", rep.expected_b},
                                       {"total", rep.expected_total}}},
              {"relation_rank", rep.relation_rank},
              {"segre_dim2", rep.segre_dim2},
              {"free_dim2", rep.free_dim2},
              {"kernel_count", rep.kernel_count},
              {"kernel_rank", rep.kernel_rank},
              {"z_dim2", rep.z_dim2},
              {"expected_kernel_dim", rep.expected_kernel_dim}};
}

json segre_hilbert_report_to_json(const SegreHilbertReport& rep) {
  return json{{"m", rep.m},
              {"n", rep.n},
              {"degree", rep.degree},
              {"gb_dims", rep.gb_dims},
              {"oracle_dims", rep.oracle_dims},
              {"expected_dims", rep.expected_dims}};
}

json square_free_certificate_to_json(const SquareFreeCertificate& cert) {
  return json{{"m", cert.m},
              {"n", cert.n},
              {"w_relations_groebner", cert.w_relations_groebner},
              {"normal2_shape", cert.normal2_shape},
              {"normal3_count", cert.normal3_count},
              {"normal3_expected", cert.normal3_expected},
              {"z_shape_coeffs", cert.z_shape_coeffs},
              {"z_shape_indices", cert.z_shape_indices},
              {"z_shape_onto", cert.z_shape_onto},
              {"z_relations_groebner", cert.z_relations_groebner},
              {"z_binomial_skew_ring", cert.z_binomial_skew_ring}};
}

json pbw_report_to_json(const PbwReport& rep) {
  json gb{{"is_groebner", rep.gb.is_groebner}};
  if (rep.gb.witness) {
    json letters = json::array();
    for (std::uint32_t c : rep.gb.witness->letters()) letters.push_back(c);
    gb["witness"] = std::move(letters);
  }
  return json{{"square_free", rep.square_free},
              {"groebner", std::move(gb)},
              {"shape_coeffs", rep.shape_coeffs},
              {"shape_indices", rep.shape_indices},
              {"shape_onto", rep.shape_onto},
              {"binomial_skew_ring", rep.binomial_skew_ring},
              {"discrepancy", rep.discrepancy}};
}

} // namespace ybsegre
