#pragma once

#include <string_view>

#include "json.hpp"
#include "mac/classifier.hpp"
#include "mac/cohomology.hpp"
#include "mac/limits.hpp"
#include "mac/loopspace.hpp"
#include "mac/nonface.hpp"
#include "mac/simplicial_complex.hpp"

// JSON interchange: every vertex is a 1-indexed integer; sets serialize as
// ascending arrays.
namespace mac::report {

using Json = nlohmann::ordered_json;

/// Parses {"n": int, "facets": [[int,...],...]}. Throws InputError naming the
/// offending facet or vertex.
SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex complex_from_json(const Json& doc);

/// Parses {"n": int, "members": [[int,...],...]}.
NonfaceFamily family_from_json(const Json& doc);

Json to_json(VertexSet s);
Json to_json(const SimplicialComplex& k);
Json to_json(const NonfaceFamily& family);
Json to_json(const RationalTypeVerdict& verdict);
Json to_json(const HochsterTable& table);
Json to_json(const TrivialRingResult& result);
Json to_json(const HomotopyRankSeries& series, const GrowthCertificate& growth);

/// `mac classify`
Json classify(const SimplicialComplex& k);
/// `mac nonfaces`: the family plus support and intersection-graph components.
Json nonfaces(const SimplicialComplex& k);
/// `mac betti`: the Hochster table.
Json betti(const SimplicialComplex& k, const Limits& limits);
/// `mac oracle-betti`
Json oracle_betti(const SimplicialComplex& k, const Limits& limits);
/// `mac ring`
Json ring(const SimplicialComplex& k, const Limits& limits);
/// `mac loop-ranks`: product ranks for elliptic K, the witness wedge's free-Lie
/// ranks for hyperbolic K.
Json loop_ranks(const SimplicialComplex& k, const Limits& limits, int truncation, double delta);
/// `mac crosscheck`
Json crosscheck(const SimplicialComplex& k, const Limits& limits);

}  // namespace mac::report
