#include <fstream>
#include <sstream>

#include "cyclres/cli.hpp"

namespace cyclres {

namespace {

Json module_to_json(const GradedFreeModule& m) { return Json(m.twists()); }

std::string m2_module(const GradedFreeModule& m) {
  if (m.rank() == 0) return "R^0";
  std::string s = "R^{";
  for (std::size_t j = 0; j < m.rank(); ++j) s += (j ? "," : "") + std::to_string(-m.twist(j));
  return s + "}";
}

std::string m2_ring(const RingCtx& ring) {
  const Field& f = ring.field();
  std::string s = "R = " + (f.is_prime_field() ? "ZZ/" + std::to_string(f.characteristic()) : std::string("QQ")) + "[";
  std::string degs;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    s += (i ? "," : "") + ring.var(i).name;
    degs += (i ? "," : "") + std::to_string(ring.var(i).degree);
  }
  return s + ", Degrees => {" + degs + "}];\n";
}

std::string m2_entries(const PolyMatrix& m) {
  std::string s = "{";
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    s += r ? ",\n  {" : "{";
    for (std::size_t c = 0; c < m.num_cols(); ++c) {
      const Poly* p = m.find(r, c);
      s += (c ? ", " : "") + (p ? p->to_string() : std::string("0"));
    }
    s += "}";
  }
  return s + "}";
}

}  // namespace

Json ring_to_json(const RingCtx& ring) {
  Json vars = Json::array();
  for (const auto& v : ring.vars()) vars.push_back({{"name", v.name}, {"degree", v.degree}});
  return {{"vars", vars}, {"field", ring.field().spec()}};
}

Ring ring_from_json(const Json& j) {
  std::vector<Variable> vars;
  for (const auto& v : j.at("vars")) vars.push_back({v.at("name").get<std::string>(), v.at("degree").get<int>()});
  return make_ring(std::move(vars), Field::parse(j.at("field").get<std::string>()));
}

Json complex_to_json(const ChainComplex& c) {
  Json modules = Json::array();
  for (int i = 0; i <= c.length(); ++i) modules.push_back(module_to_json(c.module(i)));
  Json diffs = Json::array();
  for (int i = 1; i <= c.length(); ++i) {
    const PolyMatrix& f = c.differential(i);
    Json entries = Json::array();
    for (std::size_t r = 0; r < f.num_rows(); ++r)
      for (const auto& e : f.row(r)) entries.push_back(Json::array({r, e.col, e.value.to_string()}));
    diffs.push_back({{"i", i}, {"entries", entries}});
  }
  return {{"ctx", ring_to_json(*c.ring())}, {"modules", modules}, {"diffs", diffs}};
}

ChainComplex complex_from_json(const Json& j) {
  const Ring ring = ring_from_json(j.at("ctx"));
  std::vector<GradedFreeModule> modules;
  for (const auto& m : j.at("modules")) modules.emplace_back(m.get<std::vector<int>>());
  const auto& diffs = j.at("diffs");
  if (modules.size() != diffs.size() + 1) throw std::invalid_argument("complex json: need one more module than differentials");
  std::vector<PolyMatrix> out;
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const auto& dj = diffs[k];
    if (dj.at("i").get<std::size_t>() != k + 1) throw std::invalid_argument("complex json: differentials out of order");
    PolyMatrix f(ring, modules[k], modules[k + 1]);
    for (const auto& e : dj.at("entries")) {
      const auto r = e.at(0).get<std::size_t>();
      const auto c = e.at(1).get<std::size_t>();
      if (r >= f.num_rows() || c >= f.num_cols()) throw std::invalid_argument("complex json: entry out of range");
      f.set(r, c, parse_poly(ring, e.at(2).get<std::string>()));
    }
    out.push_back(std::move(f));
  }
  return ChainComplex(ring, std::move(out));
}

Json generators_to_json(const Ring& ring, const std::vector<Poly>& gens) {
  Json g = Json::array();
  for (const auto& p : gens) g.push_back(p.to_string());
  return {{"ctx", ring_to_json(*ring)}, {"gens", g}};
}

Json ideal_to_json(const MonomialIdeal& ideal) { return generators_to_json(ideal.ring(), ideal.polys()); }

MonomialIdeal ideal_from_json(const Json& j) {
  const Ring ring = ring_from_json(j.at("ctx"));
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    const Poly p = parse_poly(ring, g.get<std::string>());
    if (!p.is_term()) throw std::invalid_argument("ideal json: generator is not a monomial: " + g.get<std::string>());
    gens.push_back(p.terms().front().mono);
  }
  return MonomialIdeal(ring, std::move(gens));
}

Json betti_to_json(const BettiTable& b) {
  Json entries = Json::array();
  for (const auto& [key, v] : b.entries) entries.push_back(Json::array({key.first, key.second, v}));
  return {{"codim", b.codim}, {"entries", entries}, {"totals", b.totals()}};
}

BettiTable betti_from_json(const Json& j) {
  BettiTable b;
  b.codim = j.at("codim").get<int>();
  for (const auto& e : j.at("entries")) b.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>());
  return b;
}

Json report_to_json(const VerificationReport& r) {
  Json j = Json::object();
  auto put = [&](const char* key, const std::optional<bool>& v) { j[key] = v ? Json(*v) : Json(nullptr); };
  put("d2_ok", r.d2_ok);
  put("minimal_ok", r.minimal_ok);
  put("betti_match", r.betti_match);
  put("euler_ok", r.euler_ok);
  put("rank_ok", r.rank_ok);
  put("graded_exactness", r.graded_exactness);
  j["exactness_bound"] = r.exactness_bound ? Json(*r.exactness_bound) : Json(nullptr);
  j["presents_ideal"] = r.presents_ideal;
  j["ok"] = r.all_ok();
  j["diagnostics"] = r.diagnostics;
  return j;
}

std::string complex_to_m2(const ChainComplex& c) {
  std::string s = m2_ring(*c.ring());
  for (int i = 1; i <= c.length(); ++i) {
    const PolyMatrix& f = c.differential(i);
    s += "f" + std::to_string(i) + " = map(" + m2_module(f.rows()) + ", " + m2_module(f.cols()) + ", ";
    s += (f.num_rows() == 0 || f.num_cols() == 0) ? std::string("0") : m2_entries(f);
    s += ");\n";
  }
  return s;
}

std::string generators_to_m2(const Ring& ring, const std::vector<Poly>& gens) {
  std::string s = m2_ring(*ring) + "I = matrix{{";
  for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? ", " : "") + gens[k].to_string();
  return s + "}};\n";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, std::string text) {
  std::string clean;
  clean.reserve(text.size() + 1);
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '\r') {
      if (k + 1 < text.size() && text[k + 1] == '\n') continue;
      clean += '\n';
      continue;
    }
    clean += text[k];
  }
  if (clean.empty() || clean.back() != '\n') clean += '\n';
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << clean;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace cyclres
