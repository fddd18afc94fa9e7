#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclres/pipeline.hpp"

namespace cyclres {

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t v) {
  if (v == 0) return;
  auto& e = entries[{i, j}];
  e += v;
  if (e == 0) entries.erase({i, j});
}

std::vector<std::int64_t> BettiTable::totals() const {
  std::vector<std::int64_t> t(static_cast<std::size_t>(codim) + 1, 0);
  for (const auto& [key, v] : entries) {
    if (key.first < 0 || key.first > codim) continue;
    t[static_cast<std::size_t>(key.first)] += v;
  }
  return t;
}

bool BettiTable::is_symmetric(int top) const {
  for (const auto& [key, v] : entries)
    if (at(codim - key.first, top - key.second) != v) return false;
  return true;
}

std::string BettiTable::to_string() const {
  std::ostringstream out;
  if (entries.empty()) return "0\n";
  int lo = entries.begin()->first.second - entries.begin()->first.first, hi = lo;
  for (const auto& [key, v] : entries) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  const auto tot = totals();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  {
    std::vector<std::string> head, total;
    for (int i = 0; i <= codim; ++i) {
      head.push_back(std::to_string(i));
      total.push_back(std::to_string(tot[static_cast<std::size_t>(i)]));
    }
    labels.push_back("");
    cells.push_back(head);
    labels.push_back("total:");
    cells.push_back(total);
  }
  for (int r = lo; r <= hi; ++r) {
    std::vector<std::string> row;
    for (int i = 0; i <= codim; ++i) {
      const auto v = at(i, i + r);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    labels.push_back(std::to_string(r) + ":");
    cells.push_back(row);
  }
  std::size_t lw = 0;
  for (const auto& l : labels) lw = std::max(lw, l.size());
  std::vector<std::size_t> w(static_cast<std::size_t>(codim) + 1, 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line = std::string(lw - labels[r].size(), ' ') + labels[r];
    for (std::size_t i = 0; i < cells[r].size(); ++i)
      line += " " + std::string(w[i] - cells[r][i].size(), ' ') + cells[r][i];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

std::int64_t eta(int d, int m, int i) {
  if (d < 1 || d % 2 == 0) throw std::invalid_argument("eta: d must be odd and positive");
  if (m <= d + 1) throw std::invalid_argument("eta: need m > d+1");
  if (i < 0 || i > m - d) throw std::invalid_argument("eta: need 0 <= i <= m-d");
  if (i == 0 || i == m - d) return 0;
  const int h = d / 2;
  return binomial(m - h - 2, h + i) * binomial(h + i - 1, h);
}

BettiTable betti_formula(int d, int m) {
  if (d < 2) throw std::invalid_argument("betti_formula: need d >= 2");
  if (m <= d + 1) throw std::invalid_argument("betti_formula: need m >= d+2");
  BettiTable b;
  b.codim = m - d;
  b.add(0, 0, 1);
  b.add(m - d, m, 1);
  if (m == d + 2) {
    if (d % 2 == 0) {
      b.add(1, (d + 2) / 2, 2);
    } else {
      b.add(1, (d + 1) / 2, 1);
      b.add(1, (d + 3) / 2, 1);
    }
    return b;
  }
  const int h = d / 2;
  for (int i = 1; i <= m - d - 1; ++i) {
    if (d % 2 == 0) {
      b.add(i, h + i, eta(d + 1, m + 1, i) + eta(d + 1, m + 1, m - d - i));
    } else {
      b.add(i, h + i, eta(d, m, i));
      b.add(i, h + i + 1, eta(d, m, m - d - i));
    }
  }
  return b;
}

BettiTable expected_betti(int d, int m) {
  if (m != d + 1) return betti_formula(d, m);
  if (d < 1) throw std::invalid_argument("expected_betti: need d >= 1");
  BettiTable b;
  b.codim = 1;
  b.add(0, 0, 1);
  b.add(1, m, 1);
  return b;
}

BettiTable betti_of_complex(const ChainComplex& c) {
  BettiTable b;
  b.codim = c.length();
  for (int i = 0; i <= c.length(); ++i)
    for (int t : c.module(i).twists()) b.add(i, t, 1);
  return b;
}

std::vector<std::int64_t> euler_polynomial(const BettiTable& b) {
  std::vector<std::int64_t> p;
  for (const auto& [key, v] : b.entries) {
    if (key.second < 0) throw std::invalid_argument("euler_polynomial: negative degree");
    const auto j = static_cast<std::size_t>(key.second);
    if (p.size() <= j) p.resize(j + 1, 0);
    p[j] += key.first % 2 == 0 ? v : -v;
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace cyclres
