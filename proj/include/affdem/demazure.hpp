#ifndef AFFDEM_DEMAZURE_HPP
#define AFFDEM_DEMAZURE_HPP

#include <span>
#include <vector>

#include "affdem/orders.hpp"

namespace affdem {

/// w *_kind v together with the unique x0 in [e, w] with product = x0 v.
struct DemazureResult {
  WeylElt product;
  WeylElt x0;
};

/// Reduced-word recursion s_1 * (s_2 * (... (s_k * v))) over the canonical
/// word of w.
DemazureResult demazure_product(const OrderKind& kind, const WeylElt& w, const WeylElt& v);

/// The same recursion over a caller-supplied reduced word of w.
DemazureResult demazure_product_word(const OrderKind& kind, std::span<const int> word, const WeylElt& v);

/// max of {x v : x in [e, w]} found by enumeration and certified by pairwise
/// comparisons.  Twisted kinds certify inside region (default: the candidate
/// set itself).  Throws std::domain_error when no certified maximum exists.
WeylElt brute_demazure_max(const OrderKind& kind, const WeylElt& w, const WeylElt& v,
                           const std::vector<WeylElt>* region = nullptr);

/// (w * v) *_kind u == w *_kind (v *_kind u).
bool monoid_action_check(const WeylElt& w, const WeylElt& v, const WeylElt& u, const OrderKind& kind);

/// l_kind(w *_kind v) == l(x0) + l_kind(v), with x0 in [e, w] and
/// product = x0 v.
bool length_additivity_check(const WeylElt& w, const WeylElt& v, const OrderKind& kind);

} // namespace affdem

#endif // AFFDEM_DEMAZURE_HPP
