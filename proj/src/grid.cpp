#include "affdem/grid.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <random>
#include <thread>

#include "affdem/serialize.hpp"

namespace affdem {

namespace {

std::string compact(const Json& j)
{
  return j.dump();
}

GridSummary run_element(const WeylElt& w, const std::vector<Weight>& weights,
                        const std::vector<Coweight>& coweights, const std::vector<WeylElt>& candidates)
{
  GridSummary out;
  const CartanPtr& data = w.data();
  for (const auto& lambda : weights) {
    DemazurePolytope poly(lambda, w);
    for (const auto& eta : coweights) {
      EtaContext ctx(data, eta);
      for (const auto& v : candidates) {
        if (!ctx.is_coset_rep(v))
          continue;
        GridCell cell;
        Face face = face_vertices(poly, ctx, v);
        cell.face_agree = distinct_weights(face.vertices) == distinct_weights(face_vertices_brute(poly, ctx, v));
        for (const auto& fv : face.vertices)
          cell.face_agree = cell.face_agree && leq_standard(fv.q, poly.w());
        cell.task_farce = check_task_farce(poly, ctx, v);
        cell.same_coset = face.same_coset;
        ++out.cells;
        out.face_agree += cell.face_agree;
        out.task_farce += cell.task_farce;
        out.same_coset += cell.same_coset;
        if (!(cell.face_agree && cell.task_farce && cell.same_coset)) {
          cell.w = format_word(w.canonical_word());
          cell.lambda = compact(to_json(lambda)["fin"]) + "@" + to_string(lambda.level);
          cell.eta = compact(to_json(eta));
          cell.v = format_word(v.canonical_word());
          out.failures.push_back(std::move(cell));
        }
      }
    }
  }
  return out;
}

} // namespace

std::vector<Coweight> default_grid_coweights(const FiniteCartanData& data)
{
  const int n = data.rank();
  Coweight positive = fundamental_affine_coweight(data, 0) + fundamental_affine_coweight(data, (n + 1) / 2);
  Coweight negative = -(fundamental_affine_coweight(data, 1) + fundamental_affine_coweight(data, n));
  Coweight level_zero = zero_coweight(data);
  for (int i = 1; i < n; ++i)
    level_zero = level_zero + finite_fundamental_coweight(data, i);
  return {positive, negative, level_zero};
}

std::vector<Weight> default_grid_weights(const FiniteCartanData& data)
{
  return {fundamental_weight(data, 0), fundamental_weight(data, 0) + fundamental_weight(data, 1)};
}

std::vector<WeylElt> random_grid_elements(const CartanPtr& data, int count, int max_len, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, data->rank());
  std::vector<WeylElt> out;
  WeylEltSet seen;
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 1000 * (count + 1); ++attempt) {
    std::vector<int> word(static_cast<std::size_t>(len(rng)));
    for (auto& l : word)
      l = letter(rng);
    WeylElt u = WeylElt::from_word(data, word);
    if (seen.insert(u).second)
      out.push_back(std::move(u));
  }
  return out;
}

GridSummary run_face_grid(const std::vector<WeylElt>& elements, const std::vector<Weight>& weights,
                          const std::vector<Coweight>& coweights, int v_max_len, unsigned threads)
{
  GridSummary total;
  if (elements.empty())
    return total;
  std::vector<WeylElt> candidates = ball(elements.front().data(), v_max_len);
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<GridSummary> parts(elements.size());
  std::vector<std::future<void>> jobs;
  std::atomic<std::size_t> next{0};
  for (unsigned t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k = next++; k < elements.size(); k = next++)
        parts[k] = run_element(elements[k], weights, coweights, candidates);
    }));
  for (auto& j : jobs)
    j.get();
  for (auto& p : parts) {
    total.cells += p.cells;
    total.face_agree += p.face_agree;
    total.task_farce += p.task_farce;
    total.same_coset += p.same_coset;
    for (auto& f : p.failures)
      total.failures.push_back(std::move(f));
  }
  return total;
}

} // namespace affdem
