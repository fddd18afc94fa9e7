#include "cyclres/ring.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace cyclres {

RingCtx::RingCtx(std::vector<Variable> vars, Field field)
    : vars_(std::move(vars)), field_(field) {
  if (vars_.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw std::invalid_argument("empty variable name");
    if (v.degree < 1) throw std::invalid_argument("variable degrees must be positive: " + v.name);
    if (!seen.insert(v.name).second) throw std::invalid_argument("duplicate variable " + v.name);
  }
}

std::optional<std::size_t> RingCtx::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t RingCtx::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable " + std::string(name));
}

int RingCtx::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) d += m[i] * vars_[i].degree;
  return d;
}

Ring make_ring(std::vector<Variable> vars, Field field) {
  return std::make_shared<const RingCtx>(std::move(vars), field);
}

Ring make_ring(const std::vector<std::string>& names, Field field) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back({n, 1});
  return make_ring(std::move(vars), field);
}

Ring extend_ring(const Ring& base, const std::vector<Variable>& extra) {
  auto vars = base->vars();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_ring(std::move(vars), base->field());
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

std::vector<Monomial> graded_piece_basis(const RingCtx& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const std::size_t n = ring.size();
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const int w = ring.var(i).degree;
    for (int e = left / w; e >= 0; --e) {
      cur.set(i, e);
      rec(i + 1, left - e * w);
    }
    cur.set(i, 0);
  };
  rec(0, degree);
  return out;
}

}  // namespace cyclres
