#include <algorithm>

#include "cyclres/linalg.hpp"

namespace cyclres {

namespace {

// a - c * b, both sorted.
SparseVec axpy(const Field& f, const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back({j->first, f.neg(f.mul(c, j->second))});
      ++j;
    } else {
      Scalar v = f.sub(i->second, f.mul(c, j->second));
      if (!f.is_zero(v)) out.push_back({i->first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add(SparseVec row, Scalar rhs) {
  const Field& f = field_;
  while (!row.empty()) {
    const std::uint32_t lead = row.front().first;
    if (lead < pivot_of_.size() && pivot_of_[lead] >= 0) {
      const PivotRow& p = rows_[static_cast<std::size_t>(pivot_of_[lead])];
      const Scalar c = row.front().second;
      rhs = f.sub(rhs, f.mul(c, p.rhs));
      row = axpy(f, row, c, p.row);
      continue;
    }
    const Scalar inv = f.inv(row.front().second);
    for (auto& e : row) e.second = f.mul(e.second, inv);
    if (pivot_of_.size() <= lead) pivot_of_.resize(lead + 1, -1);
    pivot_of_[lead] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back({std::move(row), f.mul(rhs, inv)});
    return true;
  }
  if (!f.is_zero(rhs)) consistent_ = false;
  return f.is_zero(rhs);
}

std::vector<Scalar> SparseEchelon::solve(std::size_t num_unknowns) const {
  const Field& f = field_;
  std::vector<Scalar> x(num_unknowns, f.zero());
  std::vector<const PivotRow*> order;
  order.reserve(rows_.size());
  for (const auto& r : rows_) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [](const PivotRow* a, const PivotRow* b) { return a->row.front().first > b->row.front().first; });
  for (const PivotRow* r : order) {
    Scalar v = r->rhs;
    for (std::size_t k = 1; k < r->row.size(); ++k)
      v = f.sub(v, f.mul(r->row[k].second, x[r->row[k].first]));
    x[r->row.front().first] = v;
  }
  return x;
}

std::size_t sparse_rank(const Field& field, std::vector<SparseVec> rows) {
  SparseEchelon e(field);
  for (auto& r : rows) e.add(std::move(r));
  return e.rank();
}

std::size_t dense_rank_mod_p(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols,
                             std::uint32_t p) {
  auto inv = [p](std::uint64_t v) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * v % p;
      v = v * v % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
    const std::uint64_t iv = inv(a[rank * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[rank * cols + k] = static_cast<std::uint32_t>(a[rank * cols + k] * iv % p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t factor = a[r * cols + c];
      if (!factor) continue;
      for (std::size_t k = c; k < cols; ++k) {
        std::uint64_t sub = factor * a[rank * cols + k] % p;
        std::uint64_t v = a[r * cols + k];
        a[r * cols + k] = static_cast<std::uint32_t>(v >= sub ? v - sub : v + p - sub);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace cyclres
