#ifndef AFFDEM_POLYTOPE_HPP
#define AFFDEM_POLYTOPE_HPP

#include <span>
#include <string_view>
#include <vector>

#include "affdem/demazure.hpp"
#include "affdem/parabolic.hpp"

namespace affdem {

/*
  P_lambda^w = conv{q lambda : q in [e, w]} for lambda dominant integral of
  positive level.  The element w is normalised to the maximal-length
  representative of w W_lambda, which leaves the vertex set unchanged.
*/
class DemazurePolytope {
 public:
  /// Throws std::invalid_argument unless lambda is dominant integral of
  /// positive level.
  DemazurePolytope(Weight lambda, const WeylElt& w);

  const CartanPtr& data() const { return w_.data(); }
  const Weight& lambda() const { return lambda_; }
  const WeylElt& w() const { return w_; }
  const WeylElt& requested_w() const { return requested_; }
  /// [e, w] for the normalised w.
  const std::vector<WeylElt>& interval() const { return interval_; }
  /// Distinct vertices, sorted.
  const std::vector<Weight>& vertices() const { return vertices_; }
  /// witnesses()[k] lists every q in [e, w] with q lambda = vertices()[k].
  const std::vector<std::vector<WeylElt>>& witnesses() const { return witnesses_; }

  bool is_vertex(const Weight& mu) const;
  /// Exact convex-hull membership by linear programming over the vertices.
  bool contains(const Weight& mu) const;

 private:
  Weight lambda_;
  WeylElt requested_;
  WeylElt w_;
  std::vector<WeylElt> interval_;
  std::vector<Weight> vertices_;
  std::vector<std::vector<WeylElt>> witnesses_;
};

/// The three inequality families: Lambda-check_i, -Lambda-check_i, omega_i^vee.
enum class Family { positive, negative, level_zero };

std::string_view to_string(Family f);
/// The regular order whose Demazure product enters the family.
OrderKind family_kind(Family f);
/// eta_i of the family; i ranges over 0..n, or 1..n for level_zero.
Coweight family_coweight(const FiniteCartanData& data, Family f, int i);

/// <mu, normal> >= rhs.
struct Inequality {
  Family family;
  int i;
  WeylElt v;
  Coweight normal;
  Rational rhs;

  Rational slack(const FiniteCartanData& data, const Weight& mu) const;
  bool satisfied_by(const FiniteCartanData& data, const Weight& mu) const;
};

struct InequalitySystem {
  Rational level;  ///< <mu, K> = level
  std::vector<Inequality> inequalities;
};

/// The inequality for eta and v: normal v eta, rhs <lambda, (w^{-1} *_kind v) eta>.
Inequality make_inequality(const DemazurePolytope& poly, const OrderKind& kind, const Coweight& eta,
                           const WeylElt& v);

/// All three families over v in W^(eta_i) with standard length at most max_length.
InequalitySystem inequalities(const DemazurePolytope& poly, int max_length);

/// Whether mu satisfies the level equality and every inequality.
bool satisfies(const FiniteCartanData& data, const InequalitySystem& system, const Weight& mu);

struct FaceVertex {
  WeylElt q;
  Weight vertex;
};

/// Combinatorial description of the face F(v, eta).
struct Face {
  WeylElt v;
  Coweight normal;
  Rational rhs;
  WeylElt regular_product;  ///< w^{-1} *_diamond v
  WeylElt twisted_product;  ///< w^{-1} *_eta v
  WeylElt rep;              ///< pi^(eta)(w^{-1} *_diamond v)
  WeylElt top;              ///< pi_(eta)(w^{-1} *_eta v)
  bool same_coset = false;  ///< pi^(eta) of both products agree
  std::vector<FaceVertex> vertices;
};

/// Face vertices from the interval [e, top] in W(eta) via
/// y -> v y^{-1} rep^{-1}.  Throws std::invalid_argument unless v is in W^(eta).
Face face_vertices(const DemazurePolytope& poly, const EtaContext& ctx, const WeylElt& v);

/// Every q in [e, w] with <q lambda, v eta> equal to the face's rhs.
std::vector<FaceVertex> face_vertices_brute(const DemazurePolytope& poly, const EtaContext& ctx,
                                            const WeylElt& v);

/// Sorted distinct weights of a list of face vertices.
std::vector<Weight> distinct_weights(const std::vector<FaceVertex>& vertices);

/// W(eta) cap rep^{-1} [e, w^{-1}] v, computed by enumeration.
std::vector<WeylElt> task_intersection(const DemazurePolytope& poly, const EtaContext& ctx, const WeylElt& v);

/// task_intersection == [e, pi_(eta)(w^{-1} *_eta v)] as sets.
bool check_task_farce(const DemazurePolytope& poly, const EtaContext& ctx, const WeylElt& v);

/// The Demazure product of the letters of a reduced word of w lying in J.
WeylElt parabolic_demazure_part(const CartanPtr& data, std::span<const int> reduced_word,
                                const std::vector<int>& J);

/// W_J cap [e, w] == [e, s_J] for the given reduced word of w.  J must be a
/// proper subset of 0..n.
bool check_classic_intersection(const WeylElt& w, std::span<const int> reduced_word, const std::vector<int>& J);
bool check_classic_intersection(const WeylElt& w, const std::vector<int>& J);

} // namespace affdem

#endif // AFFDEM_POLYTOPE_HPP
