#ifndef AFFDEM_SERIALIZE_HPP
#define AFFDEM_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "affdem/orders.hpp"
#include "affdem/parabolic.hpp"
#include "affdem/polytope.hpp"

namespace affdem {

using Json = nlohmann::ordered_json;

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Rational& q);
Json to_json(const Weight& lambda);
Json to_json(const Coweight& eta);
Json to_json(const AffineRoot& beta);
/// {"word": [...], "fin_matrix": [[...]], "xi": [...]}.
Json to_json(const WeylElt& u);
Json word_json(const WeylElt& u);
Json to_json(const FiniteCartanData& data);
Json to_json(const EtaContext& ctx);
Json to_json(const Inequality& ineq);
Json to_json(const InequalitySystem& system);
Json to_json(const Face& face);
Json to_json(const DemazurePolytope& poly);

Rational rational_from_json(const Json& j);

/*
  Weights are accepted as JSON {"fin": [...], "level": "1", "delta": "0"} or
  as a sum of terms  [c][*]symbol  with rational c and symbol one of
  L<i> (Lambda_i), w<i> (omega_i), a<i> (alpha_i) and delta, e.g. "L0+L1".
*/
Weight parse_weight(const FiniteCartanData& data, std::string_view text);
Weight weight_from_json(const FiniteCartanData& data, const Json& j);

/*
  Coweights are accepted as JSON {"fin": [...], "d": "1", "k": "0"} or as a
  sum of terms with symbols Lv<i> (Lambda-check_i), wv<i> (omega_i^vee),
  av<i> (alpha_i^vee), K and d, e.g. "-Lv1-Lv3" or "wv1+wv2".
*/
Coweight parse_coweight(const FiniteCartanData& data, std::string_view text);
Coweight coweight_from_json(const FiniteCartanData& data, const Json& j);

/// Word text ("2,1,0", "e", "0,1:inv"), a JSON array of letters, or an
/// element object carrying "word".
WeylElt parse_element(const CartanPtr& data, std::string_view text);
WeylElt element_from_json(const CartanPtr& data, const Json& j);

/// "a1+a2", "-a1+d", "a0" for the simple root alpha_0.
std::string root_label(const FiniteCartanData& data, const AffineRoot& beta);

/// DOT digraph with one node per element (canonical word) and one edge per
/// arrow labelled by its root.
std::string hasse_dot(const std::vector<WeylElt>& elements, const std::vector<Arrow>& arrows);
Json hasse_json(const OrderKind& kind, const std::vector<WeylElt>& elements, const std::vector<Arrow>& arrows);

/// Faces F(v, eta) for every v in W^(eta) up to the length bound, merged by
/// vertex set and ordered by inclusion, as a DOT digraph.
std::string face_lattice_dot(const DemazurePolytope& poly, const EtaContext& ctx, int max_length);

} // namespace affdem

#endif // AFFDEM_SERIALIZE_HPP
