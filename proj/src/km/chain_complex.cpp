#include <stdexcept>

#include "cyclres/km.hpp"

namespace cyclres {

ChainComplex::ChainComplex(Ring ring, std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)), diffs_(std::move(diffs)) {
  if (diffs_.empty()) throw std::invalid_argument("a complex needs at least one differential");
  modules_.push_back(diffs_[0].rows());
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    const PolyMatrix& f = diffs_[i];
    if (!same_ring(f.ring(), ring_))
      throw std::invalid_argument("differential f_" + std::to_string(i + 1) + " over a different ring");
    if (!(f.rows() == modules_.back()))
      throw std::invalid_argument("differential f_" + std::to_string(i + 1) +
                                  " does not match the twists of F_" + std::to_string(i));
    modules_.push_back(f.cols());
  }
}

const GradedFreeModule& ChainComplex::module(int i) const {
  static const GradedFreeModule empty;
  if (i < 0 || i >= static_cast<int>(modules_.size())) return empty;
  return modules_[static_cast<std::size_t>(i)];
}

const PolyMatrix& ChainComplex::differential(int i) const {
  if (i < 1 || i > length()) throw std::out_of_range("no differential f_" + std::to_string(i));
  return diffs_[static_cast<std::size_t>(i - 1)];
}

std::vector<std::size_t> ChainComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& m : modules_) r.push_back(m.rank());
  return r;
}

int ChainComplex::first_nonzero_composite() const {
  for (int i = 1; i < length(); ++i)
    if (!(differential(i) * differential(i + 1)).is_zero()) return i;
  return 0;
}

bool ChainComplex::is_homogeneous() const {
  for (const auto& f : diffs_)
    if (!f.is_homogeneous()) return false;
  return true;
}

bool ChainComplex::is_minimal() const {
  for (const auto& f : diffs_)
    if (f.has_unit_entry()) return false;
  return true;
}

void ChainComplex::require_complex(std::string_view what) const {
  if (int i = first_nonzero_composite())
    throw std::logic_error(std::string(what) + ": f_" + std::to_string(i) + " * f_" +
                           std::to_string(i + 1) + " is not zero");
  if (!is_homogeneous()) throw std::logic_error(std::string(what) + ": differential not homogeneous");
}

ChainComplex ChainComplex::change_ring(const Ring& target) const {
  std::vector<PolyMatrix> d;
  for (const auto& f : diffs_) d.push_back(f.change_ring(target));
  return ChainComplex(target, std::move(d));
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  if (a.length() != b.length()) return false;
  for (int i = 0; i <= a.length(); ++i)
    if (!(a.module(i) == b.module(i))) return false;
  for (int i = 1; i <= a.length(); ++i)
    if (!(a.differential(i) == b.differential(i))) return false;
  return true;
}

}  // namespace cyclres
