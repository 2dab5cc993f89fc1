#ifndef AFFDEM_ORDERS_HPP
#define AFFDEM_ORDERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affdem/weyl.hpp"

namespace affdem {

/// Affine dominant (d > 0), affine antidominant (d < 0) or finite dominant
/// (d = 0) in the sense of the sign of <alpha_i, eta>.
bool is_appropriately_dominant(const FiniteCartanData& data, const Coweight& eta);

/// One of the four graded orders on W.
class OrderKind {
 public:
  enum class Tag { standard, opposite, semi_infinite, twisted };

  static OrderKind standard() { return OrderKind(Tag::standard); }
  static OrderKind opposite() { return OrderKind(Tag::opposite); }
  static OrderKind semi_infinite() { return OrderKind(Tag::semi_infinite); }
  /// Throws std::invalid_argument unless eta is appropriately dominant.
  static OrderKind twisted(const FiniteCartanData& data, Coweight eta);

  Tag tag() const { return tag_; }
  bool is_regular() const { return tag_ != Tag::twisted; }
  const Coweight& eta() const { return *eta_; }
  /// Cone of Lemma-uniform positivity for regular kinds.
  RootCone cone() const;
  /// "standard", "opposite", "semi_infinite" or "twisted".
  std::string name() const;

 private:
  explicit OrderKind(Tag tag) : tag_(tag) {}

  Tag tag_;
  std::optional<Coweight> eta_;
};

/// Accepts std|standard, opp|opposite, semi|semi_infinite and twisted; the
/// twisted kind requires eta.
OrderKind parse_order_kind(const FiniteCartanData& data, std::string_view text,
                           const std::optional<Coweight>& eta = std::nullopt);

std::int64_t semi_infinite_length(const WeylElt& u);
/// l(u) - 2 |inversions(u) cap A'_eta| with A'_eta = {beta > 0 : <beta, eta> < 0}.
std::int64_t twisted_length(const WeylElt& u, const Coweight& eta);
std::int64_t length(const OrderKind& kind, const WeylElt& u);

/// Whether w <= s_beta w in the given order, decided from roots alone:
/// w^{-1} beta in the cone for regular kinds, and the symmetric-difference
/// criterion for twisted kinds.  beta must be a positive real root.
bool raises(const OrderKind& kind, const WeylElt& w, const AffineRoot& beta);

/// The arrow w -> s_beta w: raises() together with a length increase of 1.
bool is_cover(const OrderKind& kind, const WeylElt& w, const AffineRoot& beta);

/// The positive root beta with g = s_beta, if g is a reflection.
std::optional<AffineRoot> reflection_root(const WeylElt& g);

struct Cover {
  WeylElt target;
  AffineRoot beta;
};

/// All arrows u -> s_beta u of the semi-infinite order.
std::vector<Cover> semi_infinite_covers(const WeylElt& u);

/// Decision procedure for the standard, opposite and semi-infinite orders.
/// Twisted kinds are rejected: use leq_twisted_semidecision.
bool leq(const OrderKind& kind, const WeylElt& x, const WeylElt& y);

bool leq_semi_infinite(const WeylElt& x, const WeylElt& y);

enum class Semidecision { proved_leq, inconclusive };

/// Searches for a chain of twisted arrows from x to y inside region.
Semidecision leq_twisted_semidecision(const Coweight& eta, const WeylElt& x, const WeylElt& y,
                                      const std::vector<WeylElt>& region);

struct Arrow {
  std::size_t from;
  std::size_t to;
  AffineRoot beta;
};

/// All arrows of the given kind between members of elements.
std::vector<Arrow> hasse_arrows(const OrderKind& kind, const std::vector<WeylElt>& elements);

/// Both clauses of the diamond lemma for w < v and simple s (regular kinds).
/// Throws std::invalid_argument when w < v fails.
bool diamond_check(const OrderKind& kind, const WeylElt& w, const WeylElt& v, int s);

} // namespace affdem

#endif // AFFDEM_ORDERS_HPP
