#ifndef AFFDEM_GRID_HPP
#define AFFDEM_GRID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "affdem/polytope.hpp"

namespace affdem {

/// One cocharacter per classification: Lv0 + Lv_ceil(n/2), -Lv1 - Lvn and
/// wv1 + ... + wv_{n-1}.
std::vector<Coweight> default_grid_coweights(const FiniteCartanData& data);

/// Lambda_0 and Lambda_0 + Lambda_1.
std::vector<Weight> default_grid_weights(const FiniteCartanData& data);

/// Distinct elements from random words of at most max_len letters drawn
/// from a seeded mt19937_64 stream.
std::vector<WeylElt> random_grid_elements(const CartanPtr& data, int count, int max_len, std::uint64_t seed);

struct GridCell {
  std::string w;
  std::string lambda;
  std::string eta;
  std::string v;
  bool face_agree = false;
  bool task_farce = false;
  bool same_coset = false;
};

struct GridSummary {
  std::size_t cells = 0;
  std::size_t face_agree = 0;
  std::size_t task_farce = 0;
  std::size_t same_coset = 0;
  std::vector<GridCell> failures;

  bool all_pass() const { return face_agree == cells && task_farce == cells && same_coset == cells; }
};

/// Runs every cell (w, lambda, eta, v) with v in W^(eta) of standard length
/// at most v_max_len.  Cells are processed in parallel over w; the summary
/// and the failure list are independent of scheduling.
GridSummary run_face_grid(const std::vector<WeylElt>& elements, const std::vector<Weight>& weights,
                          const std::vector<Coweight>& coweights, int v_max_len, unsigned threads = 0);

} // namespace affdem

#endif // AFFDEM_GRID_HPP
