#include "cyclres/linalg.hpp"

namespace cyclres {

std::size_t rank_at_random_point(const PolyMatrix& a, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return rank_at_random_point(a, trials, rng);
}

std::size_t rank_at_random_point(const PolyMatrix& a, int trials, std::mt19937_64& rng) {
  if (a.num_rows() == 0 || a.num_cols() == 0 || a.is_zero()) return 0;
  const RingCtx& ring = *a.ring();
  const Field& field = ring.field();
  const std::uint32_t p = field.is_prime_field() ? field.characteristic() : kEvaluationPrime;
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);

  std::size_t best = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::vector<std::uint64_t>> powers(ring.size());
    for (auto& pw : powers) {
      pw = {1, dist(rng)};
    }
    auto power = [&](std::size_t var, int e) {
      auto& pw = powers[var];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * pw[1] % p);
      return pw[e];
    };
    std::vector<std::uint32_t> dense(a.num_rows() * a.num_cols(), 0);
    for (std::size_t r = 0; r < a.num_rows(); ++r)
      for (const auto& e : a.row(r)) {
        std::uint64_t v = 0;
        for (const auto& t : e.value.terms()) {
          std::uint64_t term = field.reduce_mod(t.coeff, p);
          for (std::size_t i = 0; i < ring.size() && term; ++i)
            if (t.mono[i]) term = term * power(i, t.mono[i]) % p;
          v = (v + term) % p;
        }
        dense[r * a.num_cols() + e.col] = static_cast<std::uint32_t>(v);
      }
    best = std::max(best, dense_rank_mod_p(std::move(dense), a.num_rows(), a.num_cols(), p));
  }
  return best;
}

}  // namespace cyclres
