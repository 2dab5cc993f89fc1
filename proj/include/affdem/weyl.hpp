#ifndef AFFDEM_WEYL_HPP
#define AFFDEM_WEYL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "affdem/cartan.hpp"

namespace affdem {

/// Positivity cones on real affine roots.
enum class RootCone { positive, negative, semi_infinite };

/// Real affine root alpha + k delta, alpha in root coordinates.
struct AffineRoot {
  IntVector alpha;
  std::int64_t k = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend bool operator<(const AffineRoot& a, const AffineRoot& b)
  {
    return a.k != b.k ? a.k < b.k : a.alpha < b.alpha;
  }

  AffineRoot operator-() const;
  bool is_positive() const;
  bool is_semi_infinite_positive() const;
  bool in_cone(RootCone cone) const;
};

/// Sign of a nonzero finite root given in root coordinates.
bool is_positive_finite_root(std::span<const std::int64_t> alpha);

/// alpha_i as an affine root, i = 0..n.
AffineRoot simple_affine_root(const FiniteCartanData& data, int i);

/// Throws std::invalid_argument unless beta.alpha is a root of data.
void require_real_root(const FiniteCartanData& data, const AffineRoot& beta);

/// <alpha + k delta, eta>.
Rational pair(const FiniteCartanData& data, const AffineRoot& beta, const Coweight& eta);

/*
  Element u = w t_xi of the affine Weyl group W = W_fin x| Q^vee.

  The finite part w is stored as its integer matrix on root coordinates
  (column j is w(alpha_j)) together with the matrix of its inverse; xi is in
  simple-coroot coordinates.  Elements are compared by (matrix, xi).
*/
class WeylElt {
 public:
  WeylElt() = default;
  /// The identity of W for the given root system.
  explicit WeylElt(CartanPtr data);

  static WeylElt simple(CartanPtr data, int i);
  static WeylElt translation(CartanPtr data, IntVector xi);
  static WeylElt reflection(CartanPtr data, const AffineRoot& beta);
  /// Product s_{i_1} s_{i_2} ... s_{i_k}; rejects letters outside 0..n.
  static WeylElt from_word(CartanPtr data, std::span<const int> word);

  const CartanPtr& data() const { return data_; }
  int rank() const { return data_->rank(); }
  bool valid() const { return static_cast<bool>(data_); }

  /// Root-coordinate matrix of the finite part, row-major n x n.
  const IntVector& fin_roots() const { return fin_; }
  const IntVector& fin_roots_inverse() const { return fin_inv_; }
  /// Matrix of the finite part on simple-coroot coordinates.
  IntVector fin_coroot_matrix() const;
  const IntVector& xi() const { return xi_; }

  bool is_identity() const;
  bool is_finite() const;
  WeylElt finite_part() const;
  WeylElt translation_part() const;

  WeylElt operator*(const WeylElt& other) const;
  WeylElt inverse() const;

  IntVector finite_root_image(std::span<const std::int64_t> alpha) const;
  IntVector finite_root_preimage(std::span<const std::int64_t> alpha) const;
  IntVector finite_coroot_image(std::span<const std::int64_t> xi) const;
  IntVector finite_coroot_preimage(std::span<const std::int64_t> xi) const;

  AffineRoot act(const AffineRoot& beta) const;
  AffineRoot act_inverse(const AffineRoot& beta) const;
  Weight act(const Weight& lambda) const;
  Coweight act(const Coweight& eta) const;

  /// {beta > 0 : u(beta) < 0}, sorted.
  std::vector<AffineRoot> inversions() const;
  std::int64_t length() const;
  /// Length of the finite part.
  std::int64_t finite_length() const;

  /// l(s_i u) < l(u).
  bool is_left_descent(int i) const;
  /// l(u s_i) < l(u).
  bool is_right_descent(int i) const;

  /// Reduced word from left-descent stripping with lowest-index choice,
  /// leftmost letter first.
  std::vector<int> canonical_word() const;

  friend bool operator==(const WeylElt& a, const WeylElt& b);
  std::size_t hash() const;

 private:
  CartanPtr data_;
  IntVector fin_;
  IntVector fin_inv_;
  IntVector xi_;
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& u) const { return u.hash(); }
};

using WeylEltSet = std::unordered_set<WeylElt, WeylEltHash>;

/// Word text: comma-separated letters with an optional ":inv" suffix;
/// "" or "e" is the identity.
struct ParsedWord {
  std::vector<int> letters;
  bool inverse = false;
};

ParsedWord parse_word(std::string_view text);
WeylElt parse_weyl_element(const CartanPtr& data, std::string_view text);
/// "e" for the empty word, otherwise "i1,i2,...".
std::string format_word(std::span<const int> word);

/// Standard Bruhat order by the lifting property along left descents.
bool leq_standard(const WeylElt& x, const WeylElt& y);

/// [e, y] in the standard Bruhat order.
std::vector<WeylElt> interval_standard(const WeylElt& y);

/// All elements of standard length at most max_len, ordered by length then
/// canonical word.
std::vector<WeylElt> ball(const CartanPtr& data, int max_len);

/// Sorts by standard length, then canonical word.
void sort_canonically(std::vector<WeylElt>& elements);

} // namespace affdem

#endif // AFFDEM_WEYL_HPP
