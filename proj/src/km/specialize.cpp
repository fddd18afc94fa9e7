#include <stdexcept>

#include "cyclres/km.hpp"

namespace cyclres {

ChainComplex specialize_complex(const ChainComplex& c, const Assignment& images, const Ring& target) {
  std::vector<PolyMatrix> diffs;
  GradedFreeModule rows = c.module(0);
  for (int i = 1; i <= c.length(); ++i) {
    PolyMatrix m = substitute(c.differential(i), images, target);
    std::vector<int> twists = c.module(i).twists();
    std::vector<bool> seen(twists.size(), false);
    for (std::size_t r = 0; r < m.num_rows(); ++r)
      for (const auto& e : m.row(r)) {
        if (!e.value.is_homogeneous())
          throw std::invalid_argument("specialize_complex: inhomogeneous entry in f_" + std::to_string(i));
        const int tw = rows.twist(r) + *e.value.degree();
        if (seen[e.col] && twists[e.col] != tw)
          throw std::invalid_argument("specialize_complex: degree-incompatible substitution in f_" +
                                      std::to_string(i) + ", column " + std::to_string(e.col));
        twists[e.col] = tw;
        seen[e.col] = true;
      }
    GradedFreeModule cols(std::move(twists));
    diffs.push_back(m.with_modules(rows, cols));
    rows = cols;
  }
  ChainComplex out(target, std::move(diffs));
  out.require_complex("specialize_complex");
  return out;
}

}  // namespace cyclres
