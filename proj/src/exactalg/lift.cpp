#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "cyclres/linalg.hpp"

namespace cyclres {

namespace {

struct UnknownKey {
  std::uint32_t col, row;
  Monomial mono;
  friend bool operator==(const UnknownKey&, const UnknownKey&) = default;
};

struct EquationKey {
  std::uint32_t constraint, row, col;
  Monomial mono;
  friend bool operator==(const EquationKey&, const EquationKey&) = default;
};

struct KeyHash {
  std::size_t operator()(const UnknownKey& k) const {
    return k.mono.hash() ^ (std::size_t{k.col} * 0x9e3779b97f4a7c15ull) ^ (std::size_t{k.row} << 20);
  }
  std::size_t operator()(const EquationKey& k) const {
    return k.mono.hash() ^ (std::size_t{k.constraint} * 0x9e3779b97f4a7c15ull) ^
           (std::size_t{k.row} << 20) ^ (std::size_t{k.col} << 40);
  }
};

using Column = std::vector<std::pair<std::size_t, const Poly*>>;

std::vector<Column> columns_of(const PolyMatrix& m) {
  std::vector<Column> cols(m.num_cols());
  for (std::size_t r = 0; r < m.num_rows(); ++r)
    for (const auto& e : m.row(r)) cols[e.col].push_back({r, &e.value});
  return cols;
}

struct Factors {
  PolyMatrix left, right;
  std::vector<Column> left_cols, right_cols;
  const PolyMatrix* rhs;
};

class System {
 public:
  System(const Ring& ring, const GradedFreeModule& rows, const GradedFreeModule& cols,
         const std::vector<MatrixConstraint>& constraints)
      : ring_(ring), rows_(rows), cols_(cols) {
    for (const auto& c : constraints) {
      Factors f;
      f.left = c.left ? *c.left : PolyMatrix::identity(ring, rows);
      f.right = c.right ? *c.right : PolyMatrix::identity(ring, cols);
      if (f.left.num_cols() != rows.rank() || f.right.num_rows() != cols.rank() ||
          c.rhs.num_rows() != f.left.num_rows() || c.rhs.num_cols() != f.right.num_cols())
        throw std::invalid_argument("matrix equation shape mismatch");
      for (const PolyMatrix* m : {static_cast<const PolyMatrix*>(&f.left), static_cast<const PolyMatrix*>(&f.right), &c.rhs})
        for (std::size_t r = 0; r < m->num_rows(); ++r)
          for (const auto& e : m->row(r))
            if (!e.value.is_homogeneous())
              throw std::invalid_argument("matrix equation with inhomogeneous entries");
      f.left_cols = columns_of(f.left);
      f.right_cols = columns_of(f.right);
      f.rhs = &c.rhs;
      factors_.push_back(std::move(f));
    }
  }

  void seed_from_rhs() {
    for (std::uint32_t k = 0; k < factors_.size(); ++k) {
      const PolyMatrix& y = *factors_[k].rhs;
      for (std::uint32_t r = 0; r < y.num_rows(); ++r)
        for (const auto& e : y.row(r))
          for (const auto& t : e.value.terms()) equation({k, r, static_cast<std::uint32_t>(e.col), t.mono});
    }
  }

  void add_all_unknowns() {
    for (std::uint32_t c = 0; c < cols_.rank(); ++c)
      for (std::uint32_t j = 0; j < rows_.rank(); ++j)
        for (const auto& m : graded_piece_basis(*ring_, cols_.twist(c) - rows_.twist(j)))
          unknown({c, j, m});
  }

  void run() {
    while (!eq_queue_.empty() || !unk_queue_.empty()) {
      while (!eq_queue_.empty()) {
        std::size_t e = eq_queue_.front();
        eq_queue_.pop_front();
        expand_equation(e);
      }
      while (!unk_queue_.empty()) {
        std::size_t u = unk_queue_.front();
        unk_queue_.pop_front();
        expand_unknown(u);
      }
    }
  }

  void run_unknowns_only() {
    while (!unk_queue_.empty()) {
      std::size_t u = unk_queue_.front();
      unk_queue_.pop_front();
      expand_unknown(u);
    }
  }

  std::optional<PolyMatrix> solve() {
    const Field& f = ring_->field();
    std::vector<std::size_t> order(unknowns_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = unknowns_[a];
      const auto& y = unknowns_[b];
      if (x.col != y.col) return x.col < y.col;
      if (x.row != y.row) return x.row < y.row;
      return x.mono > y.mono;
    });
    std::vector<std::uint32_t> rank_of(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = static_cast<std::uint32_t>(i);

    std::vector<std::size_t> eq_order(equations_.size());
    for (std::size_t i = 0; i < eq_order.size(); ++i) eq_order[i] = i;
    std::sort(eq_order.begin(), eq_order.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = equations_[a];
      const auto& y = equations_[b];
      if (x.constraint != y.constraint) return x.constraint < y.constraint;
      if (x.col != y.col) return x.col < y.col;
      if (x.row != y.row) return x.row < y.row;
      return x.mono > y.mono;
    });

    SparseEchelon ech(f);
    for (std::size_t e : eq_order) {
      SparseVec row;
      row.reserve(eq_rows_[e].size());
      for (const auto& [u, c] : eq_rows_[e]) row.push_back({rank_of[u], c});
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseVec merged;
      for (const auto& entry : row) {
        if (!merged.empty() && merged.back().first == entry.first)
          merged.back().second = f.add(merged.back().second, entry.second);
        else
          merged.push_back(entry);
      }
      std::erase_if(merged, [&](const auto& x) { return f.is_zero(x.second); });
      if (!ech.add(std::move(merged), eq_rhs_[e])) return std::nullopt;
    }
    std::vector<Scalar> x = ech.solve(order.size());
    PolyMatrix out(ring_, rows_, cols_);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (f.is_zero(x[i])) continue;
      const auto& k = unknowns_[order[i]];
      out.add_to(k.row, k.col, Poly::term(ring_, k.mono, x[i]));
    }
    return out;
  }

  bool rhs_covered() const {
    for (std::uint32_t k = 0; k < factors_.size(); ++k) {
      const PolyMatrix& y = *factors_[k].rhs;
      for (std::uint32_t r = 0; r < y.num_rows(); ++r)
        for (const auto& e : y.row(r))
          for (const auto& t : e.value.terms())
            if (!eq_index_.count({k, r, static_cast<std::uint32_t>(e.col), t.mono})) return false;
    }
    return true;
  }

 private:
  std::size_t equation(const EquationKey& key) {
    auto [it, inserted] = eq_index_.try_emplace(key, equations_.size());
    if (inserted) {
      equations_.push_back(key);
      const Poly* y = factors_[key.constraint].rhs->find(key.row, key.col);
      eq_rhs_.push_back(y ? y->coefficient(key.mono) : Scalar{});
      eq_rows_.emplace_back();
      eq_queue_.push_back(it->second);
    }
    return it->second;
  }

  void unknown(const UnknownKey& key) {
    auto [it, inserted] = unk_index_.try_emplace(key, unknowns_.size());
    if (inserted) {
      unknowns_.push_back(key);
      unk_queue_.push_back(it->second);
    }
  }

  void expand_equation(std::size_t e) {
    const EquationKey key = equations_[e];
    const Factors& fac = factors_[key.constraint];
    for (const auto& le : fac.left.row(key.row))
      for (const auto& [c, rp] : fac.right_cols[key.col]) {
        const int want = cols_.twist(c) - rows_.twist(le.col);
        for (const auto& lt : le.value.terms())
          for (const auto& rt : rp->terms()) {
            Monomial t = lt.mono * rt.mono;
            if (!t.divides(key.mono)) continue;
            Monomial nu = key.mono / t;
            if (ring_->degree(nu) != want) continue;
            unknown({static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(le.col), nu});
          }
      }
  }

  void expand_unknown(std::size_t u) {
    const UnknownKey key = unknowns_[u];
    const Field& f = ring_->field();
    for (std::uint32_t k = 0; k < factors_.size(); ++k) {
      const Factors& fac = factors_[k];
      for (const auto& [r, lp] : fac.left_cols[key.row])
        for (const auto& re : fac.right.row(key.col))
          for (const auto& lt : lp->terms())
            for (const auto& rt : re.value.terms()) {
              std::size_t e = equation({k, static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(re.col),
                                        key.mono * lt.mono * rt.mono});
              eq_rows_[e].push_back({u, f.mul(lt.coeff, rt.coeff)});
            }
    }
  }

  Ring ring_;
  GradedFreeModule rows_, cols_;
  std::vector<Factors> factors_;
  std::vector<UnknownKey> unknowns_;
  std::vector<EquationKey> equations_;
  std::vector<Scalar> eq_rhs_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> eq_rows_;
  std::unordered_map<UnknownKey, std::size_t, KeyHash> unk_index_;
  std::unordered_map<EquationKey, std::size_t, KeyHash> eq_index_;
  std::deque<std::size_t> eq_queue_, unk_queue_;
};

}  // namespace

std::optional<PolyMatrix> solve_matrix_system(const Ring& ring, const GradedFreeModule& rows,
                                              const GradedFreeModule& cols,
                                              const std::vector<MatrixConstraint>& constraints,
                                              LiftStrategy strategy) {
  System sys(ring, rows, cols, constraints);
  if (strategy == LiftStrategy::reachable) {
    sys.seed_from_rhs();
    sys.run();
  } else {
    sys.add_all_unknowns();
    sys.run_unknowns_only();
    if (!sys.rhs_covered()) return std::nullopt;
  }
  return sys.solve();
}

std::optional<PolyMatrix> lift_solve(const PolyMatrix& a, const PolyMatrix& y,
                                     const std::vector<int>& unknown_col_twists, LiftStrategy strategy) {
  if (a.num_rows() != y.num_rows())
    throw std::invalid_argument("lift_solve: A has " + std::to_string(a.num_rows()) + " rows, Y has " +
                                std::to_string(y.num_rows()));
  if (y.num_cols() != unknown_col_twists.size())
    throw std::invalid_argument("lift_solve: Y has " + std::to_string(y.num_cols()) + " columns but " +
                                std::to_string(unknown_col_twists.size()) + " twists were given");
  if (!a.is_homogeneous()) throw std::invalid_argument("lift_solve: A is not homogeneous");
  return solve_matrix_system(a.ring(), a.cols(), GradedFreeModule(unknown_col_twists),
                             {MatrixConstraint{&a, nullptr, y}}, strategy);
}

}  // namespace cyclres
