#include "cyclres/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cyclres {

GradedFreeModule GradedFreeModule::shifted(int s) const {
  auto t = twists_;
  for (auto& x : t) x += s;
  return GradedFreeModule(std::move(t));
}

GradedFreeModule GradedFreeModule::dual() const {
  auto t = twists_;
  for (auto& x : t) x = -x;
  return GradedFreeModule(std::move(t));
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  auto t = a.twists_;
  t.insert(t.end(), b.twists_.begin(), b.twists_.end());
  return GradedFreeModule(std::move(t));
}

PolyMatrix::PolyMatrix(Ring ring, GradedFreeModule rows, GradedFreeModule cols)
    : ring_(std::move(ring)), rows_(std::move(rows)), cols_(std::move(cols)), data_(rows_.rank()) {}

PolyMatrix PolyMatrix::identity(const Ring& ring, const GradedFreeModule& module) {
  PolyMatrix m(ring, module, module);
  for (std::size_t i = 0; i < module.rank(); ++i) m.set(i, i, Poly::constant(ring, 1));
  return m;
}

PolyMatrix PolyMatrix::row_vector(const Ring& ring, const std::vector<Poly>& entries, int target_twist) {
  std::vector<int> twists;
  for (const auto& e : entries) {
    if (e.is_zero()) throw std::invalid_argument("row_vector needs nonzero entries to infer twists");
    twists.push_back(target_twist + *e.degree());
  }
  PolyMatrix m(ring, GradedFreeModule({target_twist}), GradedFreeModule(std::move(twists)));
  for (std::size_t c = 0; c < entries.size(); ++c) m.set(0, c, entries[c]);
  return m;
}

const Poly* PolyMatrix::find(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return &it->value;
  return nullptr;
}

Poly PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (c >= num_cols()) throw std::out_of_range("column index out of range");
  const Poly* p = find(r, c);
  return p ? *p : Poly(ring_);
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly value) {
  if (r >= num_rows() || c >= num_cols()) throw std::out_of_range("matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  bool present = it != row.end() && it->col == c;
  if (value.is_zero()) {
    if (present) row.erase(it);
    return;
  }
  if (!same_ring(value.ring(), ring_)) throw std::invalid_argument("matrix entry over a different ring");
  if (present)
    it->value = std::move(value);
  else
    row.insert(it, Entry{c, std::move(value)});
}

void PolyMatrix::add_to(std::size_t r, std::size_t c, const Poly& value) {
  if (value.is_zero()) return;
  set(r, c, at(r, c) + value);
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

std::size_t PolyMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool PolyMatrix::is_homogeneous(int shift) const {
  for (std::size_t r = 0; r < num_rows(); ++r)
    for (const auto& e : data_[r]) {
      if (!e.value.is_homogeneous()) return false;
      if (*e.value.degree() != cols_.twist(e.col) + shift - rows_.twist(r)) return false;
    }
  return true;
}

bool PolyMatrix::has_unit_entry() const {
  for (const auto& r : data_)
    for (const auto& e : r)
      if (!e.value.field().is_zero(e.value.constant_term())) return true;
  return false;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_.dual(), rows_.dual());
  for (std::size_t r = 0; r < num_rows(); ++r)
    for (const auto& e : data_[r]) t.data_[e.col].push_back(Entry{r, e.value});
  return t;
}

PolyMatrix PolyMatrix::with_modules(GradedFreeModule rows, GradedFreeModule cols) const {
  if (rows.rank() != num_rows() || cols.rank() != num_cols())
    throw std::invalid_argument("with_modules: rank mismatch");
  PolyMatrix m = *this;
  m.rows_ = std::move(rows);
  m.cols_ = std::move(cols);
  return m;
}

PolyMatrix PolyMatrix::scaled(const Scalar& c) const {
  PolyMatrix m(ring_, rows_, cols_);
  if (ring_->field().is_zero(c)) return m;
  for (std::size_t r = 0; r < num_rows(); ++r)
    for (const auto& e : data_[r]) m.data_[r].push_back(Entry{e.col, e.value.scaled(c)});
  return m;
}

PolyMatrix PolyMatrix::operator-() const { return scaled(ring_->field().neg(ring_->field().one())); }

PolyMatrix PolyMatrix::change_ring(const Ring& target) const {
  PolyMatrix m(target, rows_, cols_);
  for (std::size_t r = 0; r < num_rows(); ++r)
    for (const auto& e : data_[r]) m.set(r, e.col, cyclres::change_ring(e.value, target));
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.num_cols() != b.num_rows())
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.num_rows()) +
                                "x" + std::to_string(a.num_cols()) + " times " +
                                std::to_string(b.num_rows()) + "x" + std::to_string(b.num_cols()));
  PolyMatrix out(a.ring_ ? a.ring_ : b.ring_, a.rows_, b.cols_);
  std::vector<std::optional<Poly>> acc(b.num_cols());
  std::vector<std::size_t> touched;
  for (std::size_t r = 0; r < a.num_rows(); ++r) {
    touched.clear();
    for (const auto& ea : a.data_[r])
      for (const auto& eb : b.data_[ea.col]) {
        Poly prod = ea.value * eb.value;
        if (!acc[eb.col]) {
          acc[eb.col] = std::move(prod);
          touched.push_back(eb.col);
        } else {
          *acc[eb.col] += prod;
        }
      }
    std::sort(touched.begin(), touched.end());
    for (std::size_t c : touched) {
      if (!acc[c]->is_zero()) out.data_[r].push_back(PolyMatrix::Entry{c, std::move(*acc[c])});
      acc[c].reset();
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.num_rows() != b.num_rows() || a.num_cols() != b.num_cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  PolyMatrix out = a;
  for (std::size_t r = 0; r < b.num_rows(); ++r)
    for (const auto& e : b.data_[r]) out.add_to(r, e.col, e.value);
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.num_rows() != b.num_rows() || a.num_cols() != b.num_cols()) return false;
  for (std::size_t r = 0; r < a.num_rows(); ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].col != y[k].col || !(x[k].value == y[k].value)) return false;
  }
  return true;
}

std::string PolyMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < num_rows(); ++r) {
    s += "[";
    for (std::size_t c = 0; c < num_cols(); ++c) {
      if (c) s += ", ";
      s += at(r, c).to_string();
    }
    s += "]\n";
  }
  return s;
}

PolyMatrix substitute(const PolyMatrix& m, const Assignment& images, const Ring& target) {
  PolyMatrix out(target, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.num_rows(); ++r)
    for (const auto& e : m.row(r)) out.set(r, e.col, substitute(e.value, images, target));
  return out;
}

BlockBuilder::BlockBuilder(Ring ring, std::vector<GradedFreeModule> row_blocks,
                           std::vector<GradedFreeModule> col_blocks)
    : row_blocks_(std::move(row_blocks)), col_blocks_(std::move(col_blocks)) {
  GradedFreeModule rows, cols;
  for (const auto& b : row_blocks_) {
    row_off_.push_back(rows.rank());
    rows = direct_sum(rows, b);
  }
  for (const auto& b : col_blocks_) {
    col_off_.push_back(cols.rank());
    cols = direct_sum(cols, b);
  }
  m_ = PolyMatrix(std::move(ring), std::move(rows), std::move(cols));
}

void BlockBuilder::place(std::size_t i, std::size_t j, const PolyMatrix& block) {
  if (block.num_rows() != row_blocks_.at(i).rank() || block.num_cols() != col_blocks_.at(j).rank())
    throw std::invalid_argument("block (" + std::to_string(i) + "," + std::to_string(j) +
                                ") has shape " + std::to_string(block.num_rows()) + "x" +
                                std::to_string(block.num_cols()) + ", expected " +
                                std::to_string(row_blocks_[i].rank()) + "x" +
                                std::to_string(col_blocks_[j].rank()));
  for (std::size_t r = 0; r < block.num_rows(); ++r)
    for (const auto& e : block.row(r)) m_.add_to(row_off_[i] + r, col_off_[j] + e.col, e.value);
}

}  // namespace cyclres
