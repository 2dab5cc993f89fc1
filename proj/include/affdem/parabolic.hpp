#ifndef AFFDEM_PARABOLIC_HPP
#define AFFDEM_PARABOLIC_HPP

#include <vector>

#include "affdem/orders.hpp"

namespace affdem {

/// Coweight conjugated into appropriately dominant form, eta_dom = conjugator(eta).
struct Dominantized {
  Coweight eta;
  WeylElt conjugator;
};

/// Greedy ascent, lowest index first: finite simple reflections only when
/// d = 0, all affine simple reflections otherwise.
Dominantized dominantize(const CartanPtr& data, const Coweight& eta);

/// w = rep * sub with rep in W^(eta) and sub in W(eta).
struct Factorization {
  WeylElt rep;  ///< pi^(eta)(w)
  WeylElt sub;  ///< pi_(eta)(w)
};

/*
  Data attached to an appropriately dominant coweight eta: the vanishing set
  J, the reflection subgroup W(eta) with its canonical Coxeter generators,
  and the coset representatives W^(eta).

  For d != 0, W(eta) = W_J is a finite standard parabolic subgroup (J may
  contain 0).  For d = 0, W(eta) = (W_J)_af = W_J x| Q_J^vee with generators
  s_{alpha_j} (j in J) and s_{delta - theta_c} for each component c of J.
*/
class EtaContext {
 public:
  /// Throws std::invalid_argument unless eta is appropriately dominant.
  EtaContext(CartanPtr data, Coweight eta);

  const CartanPtr& data() const { return data_; }
  const Coweight& eta() const { return eta_; }
  CoweightClass classification() const { return class_; }
  const std::vector<int>& vanishing() const { return J_; }
  const std::vector<AffineRoot>& generator_roots() const { return generator_roots_; }
  std::vector<WeylElt> generators() const;
  /// Dynkin components of J (level zero only) and their highest roots.
  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::vector<IntVector>& component_highest_roots() const { return component_highest_; }

  /// The order matching the classification: standard, opposite or semi-infinite.
  OrderKind regular_kind() const;
  OrderKind twisted_kind() const;

  /// beta in Phi^+_eta.
  bool in_positive_roots(const AffineRoot& beta) const;
  /// l_{W(eta)}(x) = |{beta in Phi^+_eta : x(beta) < 0}|.
  std::int64_t group_length(const WeylElt& x) const;

  bool is_coset_rep(const WeylElt& v) const;
  Factorization factorize(const WeylElt& w) const;
  bool in_group(const WeylElt& u) const;
  /// [e, x] in the Bruhat order of (W(eta), canonical generators).
  std::vector<WeylElt> interval(const WeylElt& x) const;

 private:
  CartanPtr data_;
  Coweight eta_;
  CoweightClass class_;
  std::vector<int> J_;
  std::vector<AffineRoot> generator_roots_;
  std::vector<AffineRoot> finite_positive_;  // Phi^+_J when d != 0
  std::vector<std::vector<int>> components_;
  std::vector<IntVector> component_highest_;
};

bool stabilizer_membership(const WeylElt& u, const Coweight& eta);

/// Which right factor a double coset is taken with.
enum class RightGroup { stabilizer, W_eta };

/// Stabilizer W_lambda of a dominant weight of positive level, enumerated.
std::vector<WeylElt> weight_stabilizer(const CartanPtr& data, const Weight& lambda);

/// W_lambda w1 G == W_lambda w2 G with G = W_eta (stabilizer) or W(eta).
bool double_coset_equal(const Weight& lambda, const EtaContext& ctx, const WeylElt& w1, const WeylElt& w2,
                        RightGroup group = RightGroup::W_eta);

/// Maximal-length element of w W_lambda; throws std::invalid_argument unless
/// lambda is dominant integral of positive level.
WeylElt max_length_rep(const WeylElt& w, const Weight& lambda);

} // namespace affdem

#endif // AFFDEM_PARABOLIC_HPP
