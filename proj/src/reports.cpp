#include "mac/reports.hpp"

#include <string>

#include "mac/cell_oracle.hpp"
#include "mac/errors.hpp"

namespace mac::report {

namespace {

VertexSet vertex_set_from_json(const Json& arr, int n, const std::string& what) {
  if (!arr.is_array()) throw InputError(what + " must be an array of vertex indices");
  VertexSet s;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw InputError(what + " contains a non-integer vertex");
    const auto vertex = v.get<std::int64_t>();
    if (vertex < 1 || vertex > n) {
      throw InputError(what + " contains vertex " + std::to_string(vertex) + " outside 1.." +
                       std::to_string(n));
    }
    s.insert(static_cast<int>(vertex));
  }
  return s;
}

int vertex_count_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InputError("missing integer field \"n\"");
  }
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
  return static_cast<int>(n);
}

std::vector<VertexSet> sets_from_json(const Json& doc, const char* field, int n, const char* noun) {
  if (!doc.contains(field) || !doc[field].is_array()) {
    throw InputError(std::string("missing array field \"") + field + "\"");
  }
  std::vector<VertexSet> out;
  std::size_t index = 0;
  for (const auto& item : doc[field]) {
    ++index;
    out.push_back(vertex_set_from_json(item, n, std::string(noun) + " " + std::to_string(index)));
  }
  return out;
}

Json rank_to_json(const BigInt& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(value.get_str());
}

Json class_to_json(const ClassRef& c) {
  return Json{{"I", to_json(c.subset)}, {"j", c.degree}, {"index", c.index}, {"degree", c.total_degree()}};
}

const char* kind_name(RingCertificate::Kind kind) {
  switch (kind) {
    case RingCertificate::Kind::NoDisjointSupport:
      return "no_disjoint_support";
    case RingCertificate::Kind::AllProductsVanish:
      return "all_products_vanish";
    case RingCertificate::Kind::NonzeroProduct:
      return "nonzero_product";
  }
  return "unknown";
}

Json betti_to_json(const std::vector<std::int64_t>& betti) { return Json(betti); }

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return complex_from_json(doc);
}

SimplicialComplex complex_from_json(const Json& doc) {
  const int n = vertex_count_from_json(doc);
  return SimplicialComplex::from_facets(n, sets_from_json(doc, "facets", n, "facet"));
}

NonfaceFamily family_from_json(const Json& doc) {
  const int n = vertex_count_from_json(doc);
  return NonfaceFamily::from_members(n, sets_from_json(doc, "members", n, "non-face"));
}

Json to_json(VertexSet s) { return Json(s.vertices()); }

Json to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (VertexSet f : k.facets()) facets.push_back(to_json(f));
  return Json{{"n", k.vertex_count()}, {"facets", std::move(facets)}};
}

Json to_json(const NonfaceFamily& family) {
  Json members = Json::array();
  for (VertexSet m : family.members()) members.push_back(to_json(m));
  return Json{{"n", family.vertex_count()}, {"members", std::move(members)}};
}

Json to_json(const RationalTypeVerdict& verdict) {
  if (const auto* e = std::get_if<EllipticModel>(&verdict)) {
    return Json{{"kind", "elliptic"}, {"spheres", e->sphere_dims}, {"disk", e->disk_dim}};
  }
  const auto& w = std::get<HyperbolicWitness>(verdict);
  Json members = Json::array();
  for (VertexSet m : w.family.members()) members.push_back(to_json(m));
  return Json{{"kind", "hyperbolic"}, {"witness_I", to_json(w.subset)}, {"witness_nonfaces", std::move(members)}};
}

Json to_json(const HochsterTable& table) {
  Json entries = Json::array();
  for (const auto& e : table.entries()) {
    entries.push_back(Json{{"I", to_json(e.subset)}, {"j", e.degree}, {"dim", e.dimension}});
  }
  return Json{{"entries", std::move(entries)}, {"betti", betti_to_json(table.betti())}};
}

Json to_json(const TrivialRingResult& result) {
  Json cert{{"kind", kind_name(result.certificate.kind)}};
  if (result.certificate.kind == RingCertificate::Kind::NonzeroProduct) {
    const auto& p = result.certificate.product;
    Json coords = Json::array();
    for (const auto& c : p.coordinates) coords.push_back(c.get_str());
    cert["left"] = class_to_json(result.certificate.left);
    cert["right"] = class_to_json(result.certificate.right);
    cert["product"] = Json{{"I", to_json(p.subset)}, {"j", p.degree}, {"degree", p.total_degree()},
                           {"coordinates", std::move(coords)}};
  }
  return Json{{"trivial", result.trivial}, {"certificate", std::move(cert)}};
}

Json to_json(const HomotopyRankSeries& series, const GrowthCertificate& growth) {
  Json ranks = Json::array();
  for (const auto& r : series.ranks) ranks.push_back(rank_to_json(r));
  const bool exponential = growth.kind == GrowthCertificate::Kind::Exponential;
  Json out{{"ranks", std::move(ranks)},
           {"verdict", exponential ? "exponential" : "finite"},
           {"model",
            Json{{"kind", series.model.kind == SphereModel::Kind::Wedge ? "wedge" : "product"},
                 {"dims", series.model.dims}}}};
  if (exponential && growth.ratio) out["ratio"] = *growth.ratio;
  return out;
}

Json classify(const SimplicialComplex& k) { return to_json(mac::classify(k)); }

Json nonfaces(const SimplicialComplex& k) {
  const NonfaceFamily family = minimal_nonfaces(k);
  Json out = to_json(family);
  out["support"] = to_json(support(family));
  Json components = Json::array();
  for (const auto& c : component_decomposition(family)) {
    Json members = Json::array();
    for (VertexSet m : c.family.members()) members.push_back(to_json(m));
    components.push_back(Json{{"members", std::move(members)}, {"support", to_json(c.support)}});
  }
  out["components"] = std::move(components);
  return out;
}

Json betti(const SimplicialComplex& k, const Limits& limits) {
  return to_json(HochsterTable::build(k, limits));
}

Json oracle_betti(const SimplicialComplex& k, const Limits& limits) {
  const auto complex = MomentAngleCellComplex::build(k, limits);
  return Json{{"cells", complex.cell_count()}, {"betti", betti_to_json(mac::oracle_betti(complex, limits.threads))}};
}

Json ring(const SimplicialComplex& k, const Limits& limits) {
  return to_json(is_trivial_ring(k, limits));
}

Json loop_ranks(const SimplicialComplex& k, const Limits& limits, int truncation, double delta) {
  const RationalTypeVerdict verdict = mac::classify(k);
  HomotopyRankSeries series;
  if (const auto* e = std::get_if<EllipticModel>(&verdict)) {
    series = product_ranks(product_model(*e), truncation);
  } else {
    const auto& w = std::get<HyperbolicWitness>(verdict);
    series = free_lie_ranks(wedge_model(induced_subcomplex(k, w.subset), limits), truncation);
  }
  Json out = to_json(series, growth_certificate(series, delta));
  out["truncation"] = truncation;
  return out;
}

Json crosscheck(const SimplicialComplex& k, const Limits& limits) {
  const auto hochster = hochster_betti(k, limits);
  const auto oracle = mac::oracle_betti(MomentAngleCellComplex::build(k, limits), limits.threads);
  return Json{{"hochster", betti_to_json(hochster)}, {"oracle", betti_to_json(oracle)}, {"equal", hochster == oracle}};
}

}  // namespace mac::report
