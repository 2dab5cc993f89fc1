#ifndef AFFDEM_CARTAN_HPP
#define AFFDEM_CARTAN_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affdem/rational.hpp"

namespace affdem {

using IntVector = std::vector<std::int64_t>;

/// Names an irreducible finite type, e.g. {'A', 2} or {'G', 2}.
struct RootSystemTag {
  char letter = 'A';
  int rank = 1;

  std::string name() const;
  friend bool operator==(const RootSystemTag&, const RootSystemTag&) = default;
};

/// Accepts "A2", "a2", "A2affine", "A2~" and "A2^(1)".
RootSystemTag parse_root_system_tag(std::string_view text);

bool is_valid_type(char letter, int rank);

/*
  Finite root-system data for an irreducible type, numbered as in Bourbaki.

  Finite simple roots are stored 0-based (array slot k holds alpha_{k+1});
  every accessor taking a "node" uses the affine numbering 0..n, where node
  0 is alpha_0 = -theta + delta.

  Conventions:
    cartan(i, j)  = <alpha_j, alpha_i^vee>         (finite, 0-based slots)
    form (.|.)    normalised so that (theta|theta) = 2
    root coordinates are in the simple-root basis, coroot coordinates in
    the simple-coroot basis.
*/
class FiniteCartanData {
 public:
  static std::shared_ptr<const FiniteCartanData> build(char letter, int rank);
  static std::shared_ptr<const FiniteCartanData> build(RootSystemTag tag)
  {
    return build(tag.letter, tag.rank);
  }

  const RootSystemTag& tag() const { return tag_; }
  int rank() const { return tag_.rank; }

  std::int64_t cartan(int i, int j) const { return cartan_[i * rank() + j]; }

  /// Entry <alpha_j, alpha_i^vee> of the affine Cartan matrix, 0 <= i, j <= n.
  std::int64_t affine_cartan(int i, int j) const;

  const std::vector<IntVector>& positive_roots() const { return positive_roots_; }
  /// Coroot coordinates of the coroot of positive_roots()[k].
  const std::vector<IntVector>& positive_coroots() const { return positive_coroots_; }

  /// Index into positive_roots() of +-alpha, or -1 when alpha is not a root.
  /// The sign of the root is returned through *negative.
  int root_index(std::span<const std::int64_t> alpha, bool* negative = nullptr) const;

  const IntVector& highest_root() const { return highest_root_; }
  /// a_i with theta = sum a_i alpha_i (finite slots).
  const IntVector& marks() const { return highest_root_; }
  /// a_i^vee with theta^vee = sum a_i^vee alpha_i^vee.
  const IntVector& comarks() const { return comarks_; }

  /// (alpha_i|alpha_i)/2.
  const Rational& half_length(int slot) const { return half_length_[slot]; }
  /// Integer proportional to (alpha_i|alpha_i), with short roots scaled to 1.
  std::int64_t length_scale(int slot) const { return length_scale_[slot]; }

  /// (alpha_i|alpha_j).
  const Rational& root_form(int i, int j) const { return root_form_[i * rank() + j]; }
  /// (alpha_i^vee|alpha_j^vee).
  const Rational& coroot_form(int i, int j) const { return coroot_form_[i * rank() + j]; }
  const Rational& cartan_inverse(int i, int j) const { return cartan_inverse_[i * rank() + j]; }

  /// Half-sum of positive roots in root coordinates.
  const RationalVector& rho() const { return rho_; }

  std::uint64_t finite_weyl_order() const { return weyl_order_; }

  /// <alpha, beta^vee> for root coordinates alpha and coroot coordinates beta.
  std::int64_t root_coroot_pairing(std::span<const std::int64_t> root,
                                   std::span<const std::int64_t> coroot) const;

  /// (xi|zeta) for coroot-coordinate vectors.
  Rational coroot_inner(std::span<const std::int64_t> xi, std::span<const std::int64_t> zeta) const;

  /// Height of a root given in root coordinates.
  static std::int64_t height(std::span<const std::int64_t> root);

 private:
  FiniteCartanData() = default;

  RootSystemTag tag_;
  IntVector cartan_;
  std::vector<IntVector> positive_roots_;
  std::vector<IntVector> positive_coroots_;
  IntVector highest_root_;
  IntVector comarks_;
  RationalVector half_length_;
  IntVector length_scale_;
  RationalVector root_form_;
  RationalVector coroot_form_;
  RationalVector cartan_inverse_;
  RationalVector rho_;
  std::uint64_t weyl_order_ = 0;
};

using CartanPtr = std::shared_ptr<const FiniteCartanData>;

/// Element of h* = h_fin* + Q Lambda_0 + Q delta.
struct Weight {
  RootSystemTag system;
  RationalVector fin;  ///< <lambda, alpha_i^vee>, i = 1..n
  Rational level;      ///< <lambda, K>
  Rational delta;      ///< coefficient of delta, equal to <lambda, d>

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b);

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight scaled(const Rational& c) const;
};

/// Element of h = h_fin + Q K + Q d.
struct Coweight {
  RootSystemTag system;
  RationalVector fin;  ///< <alpha_i, eta>, i = 1..n
  Rational d;          ///< <delta, eta>
  Rational k;          ///< coefficient of K

  friend bool operator==(const Coweight&, const Coweight&) = default;

  Coweight operator+(const Coweight& other) const;
  Coweight operator-(const Coweight& other) const;
  Coweight operator-() const;
  Coweight scaled(const Rational& c) const;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

enum class CoweightClass { positive, negative, level_zero };

std::string_view to_string(CoweightClass c);

/// Sign of <delta, eta>.
CoweightClass classify(const Coweight& eta);

Weight zero_weight(const FiniteCartanData& data);
Coweight zero_coweight(const FiniteCartanData& data);

/// Lambda_i, i = 0..n: <Lambda_i, alpha_j^vee> = delta_ij and <Lambda_i, d> = 0.
Weight fundamental_weight(const FiniteCartanData& data, int i);
/// The finite fundamental weight omega_i (level 0), i = 1..n.
Weight finite_fundamental_weight(const FiniteCartanData& data, int i);
Weight null_root(const FiniteCartanData& data);
/// alpha_i as an element of h*, i = 0..n.
Weight simple_root_weight(const FiniteCartanData& data, int i);
/// Root coordinates alpha + k delta as an element of h*.
Weight root_weight(const FiniteCartanData& data, std::span<const std::int64_t> alpha, std::int64_t k);

/// Lambda-check_i, i = 0..n: <alpha_j, .> = delta_ij with k normalised to 0.
Coweight fundamental_affine_coweight(const FiniteCartanData& data, int i);
/// omega_i^vee, i = 1..n (level zero, no K part).
Coweight finite_fundamental_coweight(const FiniteCartanData& data, int i);
Coweight central_coweight(const FiniteCartanData& data);   // K
Coweight degree_coweight(const FiniteCartanData& data);    // d
/// alpha_i^vee, i = 0..n, with alpha_0^vee = K - theta^vee.
Coweight simple_coroot(const FiniteCartanData& data, int i);
/// Element of Q_fin^vee given in coroot coordinates.
Coweight coroot_coweight(const FiniteCartanData& data, std::span<const std::int64_t> xi);

/// <lambda, eta>; throws std::invalid_argument on mismatched root systems.
Rational pair(const FiniteCartanData& data, const Weight& lambda, const Coweight& eta);

/// <lambda, alpha_i^vee>, i = 0..n.
Rational simple_coroot_value(const FiniteCartanData& data, const Weight& lambda, int i);
/// <alpha_i, eta>, i = 0..n.
Rational simple_root_value(const FiniteCartanData& data, const Coweight& eta, int i);

/// Dominant integral with positive level.
bool is_dominant_integral(const FiniteCartanData& data, const Weight& lambda);

/// Coordinates c_0..c_n of a level-zero-in-d coweight (d = 0) in the basis
/// alpha_0^vee..alpha_n^vee.  Throws std::domain_error if d != 0.
RationalVector affine_coroot_coordinates(const FiniteCartanData& data, const Coweight& eta);

void require_same_system(const RootSystemTag& a, const RootSystemTag& b);

} // namespace affdem

#endif // AFFDEM_CARTAN_HPP
