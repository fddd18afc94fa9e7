#include "cyclres/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cyclres {

namespace {

void require_same(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("polynomials over different rings");
}

bool mono_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

void normalize(const Field& f, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), mono_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Scalar c = terms[i].coeff;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c = f.add(c, terms[j++].coeff);
    if (!f.is_zero(c)) terms[out++] = {terms[i].mono, c};
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly::Poly(Ring ring, Scalar c) : ring_(std::move(ring)) {
  if (!ring_->field().is_zero(c)) terms_.push_back({Monomial(), c});
}

Poly Poly::variable(const Ring& ring, std::string_view name) {
  return variable(ring, ring->require(name));
}

Poly Poly::variable(const Ring& ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index out of range");
  return term(ring, Monomial::variable(index), ring->field().one());
}

Poly Poly::term(const Ring& ring, const Monomial& m, Scalar c) {
  Poly p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::monomial(const Ring& ring, const Monomial& m) { return term(ring, m, ring->field().one()); }

Poly Poly::constant(const Ring& ring, std::int64_t c) { return Poly(ring, ring->field().from_int(c)); }

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  Poly p(ring);
  normalize(ring->field(), terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = ring_->degree(terms_[0].mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ring_->degree(t.mono) == d; });
}

std::optional<int> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return ring_->degree(terms_[0].mono);
}

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar{};
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, {}}, mono_greater);
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Scalar{};
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().neg(t.coeff)});
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (!ring_) ring_ = o.ring_;
  require_same(ring_, o.ring_);
  const Field& f = field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->mono > b->mono) {
      out.push_back(*a++);
    } else if (b->mono > a->mono) {
      out.push_back(*b++);
    } else {
      Scalar c = f.add(a->coeff, b->coeff);
      if (!f.is_zero(c)) out.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.cend());
  out.insert(out.end(), b, o.terms_.cend());
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly(a.ring_ ? a.ring_ : b.ring_);
  require_same(a.ring_, b.ring_);
  const Field& f = a.field();
  Poly r(a.ring_);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Poly& single = a.terms_.size() == 1 ? a : b;
    const Poly& other = a.terms_.size() == 1 ? b : a;
    const Term& s = single.terms_[0];
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) r.terms_.push_back({t.mono * s.mono, f.mul(t.coeff, s.coeff)});
    return r;
  }
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, f.mul(s.coeff, t.coeff)});
  normalize(f, out);
  r.terms_ = std::move(out);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Poly Poly::scaled(const Scalar& c) const {
  if (!ring_ || field().is_zero(c)) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coeff, c)});
  return r;
}

Poly Poly::times_monomial(const Monomial& m) const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff});
  return r;
}

std::vector<Term> grlex_terms(const RingCtx& ring, const std::vector<Term>& terms) {
  std::vector<std::pair<int, const Term*>> keyed;
  keyed.reserve(terms.size());
  for (const auto& t : terms) keyed.push_back({ring.degree(t.mono), &t});
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second->mono > b.second->mono;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& [deg, t] : keyed) out.push_back(*t);
  return out;
}

std::string monomial_to_string(const RingCtx& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.var(i).name;
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const Field& f = field();
  std::string out;
  bool first = true;
  for (const auto& t : grlex_terms(*ring_, terms_)) {
    std::string c = f.to_string(t.coeff);
    bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += monomial_to_string(*ring_, t.mono);
    }
  }
  return out;
}

Assignment identity_assignment(const Ring& source, const Ring& target) {
  Assignment a;
  for (const auto& v : source->vars())
    if (target->index_of(v.name)) a.emplace(v.name, Poly::variable(target, v.name));
  return a;
}

Poly change_ring(const Poly& p, const Ring& target) {
  if (same_ring(p.ring(), target)) return Poly::from_terms(target, p.terms());
  const RingCtx& src = *p.ring();
  std::vector<std::size_t> index(src.size());
  std::uint64_t used = 0;
  for (const auto& t : p.terms()) used |= t.mono.support();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!(used >> i & 1)) continue;
    auto j = target->index_of(src.var(i).name);
    if (!j) throw std::invalid_argument("variable " + src.var(i).name + " missing in target ring");
    index[i] = *j;
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  const Field& from = src.field();
  const Field& to = target->field();
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i)
      if (t.mono[i]) m.set(index[i], t.mono[i]);
    Scalar c = t.coeff;
    if (!(from == to)) {
      if (to.kind() == FieldKind::prime)
        c = to.from_int(from.reduce_mod(c, to.characteristic()));
      else
        throw std::invalid_argument("cannot lift prime-field coefficients to Q");
    }
    terms.push_back({m, c});
  }
  return Poly::from_terms(target, std::move(terms));
}

Poly substitute(const Poly& p, const Assignment& images, const Ring& target) {
  if (p.is_zero()) return Poly(target);
  const RingCtx& src = *p.ring();
  std::uint64_t used = 0;
  for (const auto& t : p.terms()) used |= t.mono.support();

  std::vector<const Poly*> img(src.size(), nullptr);
  bool all_terms = true;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!(used >> i & 1)) continue;
    auto it = images.find(src.var(i).name);
    if (it == images.end())
      throw std::invalid_argument("no image assigned to variable " + src.var(i).name);
    if (!it->second.is_zero() && !same_ring(it->second.ring(), target))
      throw std::invalid_argument("image of " + src.var(i).name + " is not over the target ring");
    img[i] = &it->second;
    if (!it->second.is_zero() && !it->second.is_term()) all_terms = false;
  }
  const Field& f = target->field();
  auto coeff_of = [&](const Scalar& c) {
    if (src.field() == f) return c;
    if (f.kind() == FieldKind::prime) return f.from_int(src.field().reduce_mod(c, f.characteristic()));
    throw std::invalid_argument("cannot lift prime-field coefficients to Q");
  };

  if (all_terms) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Monomial m;
      Scalar c = coeff_of(t.coeff);
      bool zero = false;
      for (std::size_t i = 0; i < src.size() && !zero; ++i) {
        int e = t.mono[i];
        if (!e) continue;
        if (img[i]->is_zero()) {
          zero = true;
          break;
        }
        const Term& it = img[i]->terms()[0];
        for (int k = 0; k < e; ++k) {
          m = m * it.mono;
          c = f.mul(c, it.coeff);
        }
      }
      if (!zero) out.push_back({m, c});
    }
    return Poly::from_terms(target, std::move(out));
  }

  Poly result(target);
  for (const auto& t : p.terms()) {
    Poly acc(target, coeff_of(t.coeff));
    for (std::size_t i = 0; i < src.size() && !acc.is_zero(); ++i)
      for (int k = 0; k < t.mono[i]; ++k) acc *= *img[i];
    result += acc;
  }
  return result;
}

}  // namespace cyclres
