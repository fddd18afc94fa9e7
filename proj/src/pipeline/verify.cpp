#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cyclres/linalg.hpp"
#include "cyclres/pipeline.hpp"

namespace cyclres {

CheckSet CheckSet::parse(const std::string& text) {
  CheckSet s = none();
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "d2") s.d2 = true;
    else if (tok == "minimal") s.minimal = true;
    else if (tok == "betti") s.betti = true;
    else if (tok == "euler") s.euler = true;
    else if (tok == "rank") s.rank = true;
    else if (tok == "all") s.d2 = s.minimal = s.betti = s.euler = s.rank = true;
    else if (tok.rfind("exact:", 0) == 0) {
      const std::string num = tok.substr(6);
      std::size_t used = 0;
      int b = -1;
      try {
        b = std::stoi(num, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != num.size() || b < 0) throw std::invalid_argument("bad exactness bound: " + tok);
      s.exact_bound = b;
    } else {
      throw std::invalid_argument("unknown check: " + tok);
    }
  }
  return s;
}

bool VerificationReport::all_ok() const { return failed().empty(); }

std::vector<std::string> VerificationReport::failed() const {
  std::vector<std::string> out;
  auto note = [&](const std::optional<bool>& v, const char* name) {
    if (v && !*v) out.emplace_back(name);
  };
  note(d2_ok, "d2");
  note(minimal_ok, "minimal");
  note(betti_match, "betti");
  note(euler_ok, "euler");
  note(rank_ok, "rank");
  note(graded_exactness, "exact");
  return out;
}

std::int64_t hilbert_function(const std::vector<std::int64_t>& f, int degree) {
  if (degree < 0) return 0;
  if (degree == 0) return 1;
  std::int64_t h = 0;
  for (std::size_t i = 1; i < f.size(); ++i) h += f[i] * binomial(degree - 1, static_cast<int>(i) - 1);
  return h;
}

namespace {

using MonoIndex = std::unordered_map<Monomial, std::uint32_t, MonomialHash>;

std::size_t piece_dim(const RingCtx& ring, const GradedFreeModule& mod, int degree) {
  std::size_t n = 0;
  for (int t : mod.twists()) n += graded_piece_basis(ring, degree - t).size();
  return n;
}

std::vector<std::int64_t> poly_sub(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + static_cast<std::size_t>(shift)] -= b[k];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

std::vector<std::int64_t> k_polynomial(const MonomialIdeal& ideal) {
  const auto& gens = ideal.gens();
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
  const MonomialIdeal smaller(ideal.ring(), rest);
  return poly_sub(k_polynomial(smaller), k_polynomial(smaller.colon(gens.back())),
                  ideal.ring()->degree(gens.back()));
}

std::size_t graded_rank(const PolyMatrix& f, int degree) {
  const RingCtx& ring = *f.ring();
  std::map<int, MonoIndex> index;
  std::vector<std::size_t> offset(f.num_rows() + 1, 0);
  for (std::size_t r = 0; r < f.num_rows(); ++r) {
    const int piece = degree - f.rows().twist(r);
    if (!index.count(piece)) {
      MonoIndex idx;
      for (const auto& mono : graded_piece_basis(ring, piece)) idx.emplace(mono, static_cast<std::uint32_t>(idx.size()));
      index.emplace(piece, std::move(idx));
    }
    offset[r + 1] = offset[r] + index.at(piece).size();
  }
  std::vector<std::vector<const PolyMatrix::Entry*>> by_col(f.num_cols());
  std::vector<std::vector<std::size_t>> rows_of(f.num_cols());
  for (std::size_t r = 0; r < f.num_rows(); ++r)
    for (const auto& e : f.row(r)) {
      by_col[e.col].push_back(&e);
      rows_of[e.col].push_back(r);
    }
  std::vector<SparseVec> vecs;
  for (std::size_t c = 0; c < f.num_cols(); ++c) {
    if (by_col[c].empty()) continue;
    for (const auto& mu : graded_piece_basis(ring, degree - f.cols().twist(c))) {
      SparseVec v;
      for (std::size_t k = 0; k < by_col[c].size(); ++k) {
        const std::size_t r = rows_of[c][k];
        const MonoIndex& idx = index.at(degree - f.rows().twist(r));
        for (const auto& t : by_col[c][k]->value.terms()) {
          auto it = idx.find(t.mono * mu);
          if (it == idx.end()) throw std::invalid_argument("graded_rank: inhomogeneous matrix");
          v.emplace_back(static_cast<std::uint32_t>(offset[r] + it->second), t.coeff);
        }
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      vecs.push_back(std::move(v));
    }
  }
  return sparse_rank(f.ring()->field(), std::move(vecs));
}

VerificationReport verify_complex(const ChainComplex& c, const MonomialIdeal& ideal, const VerifyOptions& options) {
  VerificationReport rep;
  const CheckSet& ck = options.checks;
  const int n = static_cast<int>(ideal.ring()->size());
  bool standard = true;
  for (const auto& v : ideal.ring()->vars()) standard = standard && v.degree == 1;
  const bool simplicial = standard && ideal.is_squarefree();
  const std::vector<std::int64_t> f = simplicial ? f_vector_of_ideal(ideal) : std::vector<std::int64_t>{};
  auto quotient_dim = [&](int deg) -> std::int64_t {
    if (simplicial) return hilbert_function(f, deg);
    std::int64_t count = 0;
    for (const auto& mono : graded_piece_basis(*ideal.ring(), deg)) count += ideal.contains(mono) ? 0 : 1;
    return count;
  };
  const bool homogeneous = c.is_homogeneous();
  if (!homogeneous) rep.diagnostics.push_back("complex is not homogeneous with respect to its twists");

  {
    std::vector<Monomial> gens;
    bool monomial = c.length() >= 1 && c.module(0).rank() == 1;
    if (monomial)
      for (const auto& e : c.differential(1).row(0)) {
        if (!e.value.is_term()) {
          monomial = false;
          break;
        }
        gens.push_back(e.value.terms().front().mono);
      }
    rep.presents_ideal = monomial && gens.size() == c.module(1).rank() &&
                         MonomialIdeal(c.ring(), gens) == ideal && gens.size() == ideal.size();
    if (!rep.presents_ideal) rep.diagnostics.push_back("f_1 does not list the ideal's generators");
  }

  if (ck.d2) {
    const int bad = c.first_nonzero_composite();
    rep.d2_ok = bad == 0;
    if (bad) rep.diagnostics.push_back("f_" + std::to_string(bad) + " f_" + std::to_string(bad + 1) + " != 0");
  }
  if (ck.minimal) {
    rep.minimal_ok = c.is_minimal();
    if (!*rep.minimal_ok) rep.diagnostics.push_back("a differential has an entry with nonzero constant term");
  }
  const BettiTable have = betti_of_complex(c);
  if (ck.betti) {
    std::optional<BettiTable> want = options.expected;
    if (!want) {
      const int d = static_cast<int>(f.size()) - 1;
      try {
        if (simplicial && d >= 2 && n >= d + 1 && ideal == ideal_I(d, n, ideal.ring())) want = expected_betti(d, n);
      } catch (const std::exception&) {
      }
    }
    if (want) {
      rep.betti_match = have == *want;
      if (!*rep.betti_match) rep.diagnostics.push_back("Betti table differs from the closed form");
    } else {
      rep.diagnostics.push_back("no closed-form Betti table for this ideal");
    }
  }
  if (ck.euler) {
    auto num = simplicial ? hilbert_numerator(f, n) : k_polynomial(ideal);
    while (!num.empty() && num.back() == 0) num.pop_back();
    rep.euler_ok = homogeneous && euler_polynomial(have) == num;
    if (!*rep.euler_ok) rep.diagnostics.push_back("Euler characteristic differs from the Hilbert numerator");
  }
  if (ck.rank) {
    std::mt19937_64 rng(options.seed);
    std::vector<std::size_t> r(static_cast<std::size_t>(c.length()) + 2, 0);
    for (int i = 1; i <= c.length(); ++i)
      r[static_cast<std::size_t>(i)] = rank_at_random_point(c.differential(i), options.rank_trials, rng);
    bool ok = c.length() >= 1 && r[1] == c.module(0).rank();
    for (int i = 1; i <= c.length(); ++i)
      if (r[static_cast<std::size_t>(i)] + r[static_cast<std::size_t>(i) + 1] != c.module(i).rank()) {
        ok = false;
        rep.diagnostics.push_back("rank certificate fails at F_" + std::to_string(i));
      }
    rep.rank_ok = ok;
  }
  if (ck.exact_bound) {
    rep.exactness_bound = *ck.exact_bound;
    bool ok = homogeneous;
    for (int deg = 0; ok && deg <= *ck.exact_bound; ++deg) {
      std::vector<std::size_t> rk(static_cast<std::size_t>(c.length()) + 2, 0);
      for (int i = 1; i <= c.length(); ++i) rk[static_cast<std::size_t>(i)] = graded_rank(c.differential(i), deg);
      const auto h0 = static_cast<std::int64_t>(piece_dim(*c.ring(), c.module(0), deg) - rk[1]);
      if (h0 != quotient_dim(deg)) {
        ok = false;
        rep.diagnostics.push_back("H_0 in degree " + std::to_string(deg) + " has the wrong dimension");
      }
      for (int i = 1; ok && i <= c.length(); ++i) {
        const std::size_t dim = piece_dim(*c.ring(), c.module(i), deg);
        if (rk[static_cast<std::size_t>(i)] + rk[static_cast<std::size_t>(i) + 1] != dim) {
          ok = false;
          rep.diagnostics.push_back("H_" + std::to_string(i) + " nonzero in degree " + std::to_string(deg));
        }
      }
    }
    rep.graded_exactness = ok;
  }
  return rep;
}

}  // namespace cyclres
