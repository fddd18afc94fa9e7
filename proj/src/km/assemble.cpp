#include <stdexcept>

#include "cyclres/km.hpp"

namespace cyclres {

namespace {

enum class Block { b, a, b_shifted };

struct Part {
  Block kind;
  int index;  // homological index inside C_I or C_J
};

}  // namespace

ChainComplex assemble_km(const KMData& data, const Ring& with_t) {
  const ChainComplex& ci = data.c_i;
  const ChainComplex& cj = data.c_j;
  const int g = cj.length();
  if (g < 2 || ci.length() != g - 1) throw std::invalid_argument("assemble_km: need g >= 2 and length(C_I) = g-1");
  const int shift = data.degT;
  const Field& field = with_t->field();
  const Poly t = Poly::variable(with_t, "T");

  auto parts = [&](int i) {
    std::vector<Part> p;
    if (i >= 0 && i <= g - 2) p.push_back({Block::b, i});
    if (i >= 1 && i <= g - 1) p.push_back({Block::a, i});
    if (i >= 2 && i <= g) p.push_back({Block::b_shifted, i - 1});
    return p;
  };
  auto module_of = [&](const Part& p) {
    switch (p.kind) {
      case Block::b: return ci.module(p.index);
      case Block::a: return cj.module(p.index).shifted(shift);
      case Block::b_shifted: return ci.module(p.index).shifted(shift);
    }
    return GradedFreeModule();
  };
  auto lift = [&](const PolyMatrix& m) { return m.change_ring(with_t); };
  auto times_t = [&](const PolyMatrix& m) {
    PolyMatrix out(with_t, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.num_rows(); ++r)
      for (const auto& e : m.row(r)) out.set(r, e.col, t * change_ring(e.value, with_t));
    return out;
  };
  auto t_identity = [&](const GradedFreeModule& mod, int sign) {
    PolyMatrix out(with_t, mod, mod);
    for (std::size_t r = 0; r < mod.rank(); ++r) out.set(r, r, sign > 0 ? t : -t);
    return out;
  };
  const Scalar u_inv = field.inv(data.u);

  std::vector<PolyMatrix> diffs;
  for (int i = 1; i <= g; ++i) {
    const auto tgt = parts(i - 1);
    const auto src = parts(i);
    std::vector<GradedFreeModule> rows, cols;
    for (const auto& p : tgt) rows.push_back(module_of(p));
    for (const auto& p : src) cols.push_back(module_of(p));
    BlockBuilder bb(with_t, rows, cols);
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) {
        const Part& to = tgt[r];
        const Part& from = src[c];
        try {
          if (to.kind == Block::b && from.kind == Block::b) {
            bb.place(r, c, lift(ci.differential(i)));
          } else if (to.kind == Block::b && from.kind == Block::a) {
            PolyMatrix m = lift(data.beta.at(i));
            if (i == 1) m = m + times_t(cj.differential(1));
            bb.place(r, c, m);
          } else if (to.kind == Block::b && from.kind == Block::b_shifted) {
            bb.place(r, c, lift(data.h.maps.at(static_cast<std::size_t>(i - 1))) +
                               t_identity(ci.module(i - 1), i % 2 == 0 ? 1 : -1));
          } else if (to.kind == Block::a && from.kind == Block::a) {
            bb.place(r, c, -lift(cj.differential(i)));
          } else if (to.kind == Block::a && from.kind == Block::b_shifted) {
            PolyMatrix m = -lift(data.alpha.at(i - 1));
            if (i == g) {
              Scalar coeff = g % 2 == 0 ? u_inv : field.neg(u_inv);
              m = m + times_t(cj.differential(g)).scaled(coeff);
            }
            bb.place(r, c, m);
          } else if (to.kind == Block::b_shifted && from.kind == Block::b_shifted) {
            bb.place(r, c, lift(ci.differential(i - 1)));
          }
        } catch (const std::invalid_argument& e) {
          throw std::invalid_argument("assemble_km: f_" + std::to_string(i) + ": " + e.what());
        }
      }
    diffs.push_back(bb.matrix());
  }
  ChainComplex out(with_t, std::move(diffs));
  out.require_complex("assemble_km");
  return out;
}

}  // namespace cyclres
