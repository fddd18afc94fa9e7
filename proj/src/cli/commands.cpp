#include <sstream>

#include "cyclres/cli.hpp"

namespace cyclres {

namespace {

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

Field field_of(const CommandOptions& o) {
  try {
    return Field::parse(o.field);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void require_dm(const CommandOptions& o) {
  if (o.d < 2 || o.m < o.d + 1) throw UsageError("need 2 <= d and d+1 <= m");
  if (o.m > 64) throw UsageError("m must be at most 64");
}

void require_caps(const CommandOptions& o) {
  Caps caps;
  try {
    caps = desk_caps();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (o.d > caps.max_d || o.m > caps.max_m)
    throw UsageError("(d,m) exceeds the cap d <= " + std::to_string(caps.max_d) + ", m <= " +
                     std::to_string(caps.max_m) + "; set CYCLRES_MAX_M to raise it");
}

Json set_json(const VertexSet& w) { return Json(w.members()); }

CommandResult ok(std::string out) { return {0, std::move(out), ""}; }

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::table;
  if (text == "json") return OutputFormat::json;
  if (text == "m2") return OutputFormat::m2;
  throw UsageError("unknown format: " + text);
}

CommandResult cmd_faces(const CommandOptions& o) {
  require_dm(o);
  const OutputFormat fmt = parse_format(o.format);
  if (fmt == OutputFormat::m2) throw UsageError("faces has no m2 output");
  if (o.subset) {
    VertexSet w;
    try {
      w = VertexSet::parse(o.m, *o.subset);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    const bool face = is_face(o.d, o.m, w);
    const bool facet = face && w.size() == o.d;
    std::optional<ContiguousDecomposition> dec;
    if (!w.empty() && w.size() < o.m) dec = contiguous_decomposition(w);
    if (fmt == OutputFormat::json) {
      Json j = {{"d", o.d}, {"m", o.m}, {"subset", set_json(w)}, {"face", face}, {"facet", facet}};
      if (dec) {
        Json runs = Json::array();
        for (const auto& b : dec->blocks) runs.push_back(set_json(b));
        j["decomposition"] = {{"head", set_json(dec->head)}, {"runs", runs}, {"tail", set_json(dec->tail)}};
        j["odd_runs"] = dec->odd_count();
      }
      return ok(dump(j));
    }
    std::string s = face ? (facet ? "face (facet)\n" : "face\n") : "nonface\n";
    if (dec) {
      s += "head " + dec->head.to_string() + ", runs";
      for (const auto& b : dec->blocks) s += " " + b.to_string();
      if (dec->blocks.empty()) s += " none";
      s += ", tail " + dec->tail.to_string() + "\n";
      s += "odd runs: " + std::to_string(dec->odd_count()) + "\n";
    }
    return ok(s);
  }
  const SimplicialComplex k = cyclic_complex(o.d, o.m);
  const auto f = f_vector(k);
  if (fmt == OutputFormat::json) {
    Json facets = Json::array();
    for (const auto& w : k.facets()) facets.push_back(set_json(w));
    return ok(dump({{"d", o.d}, {"m", o.m}, {"f_vector", f}, {"facets", facets}}));
  }
  std::string s = "f-vector: " + join(f) + "\nfacets (" + std::to_string(k.facets().size()) + "):\n";
  for (const auto& w : k.facets()) s += w.to_string() + "\n";
  return ok(s);
}

CommandResult cmd_complex(const CommandOptions& o) {
  require_dm(o);
  const OutputFormat fmt = parse_format(o.format);
  const Field field = field_of(o);
  const SimplicialComplex k = cyclic_complex(o.d, o.m);
  const auto f = f_vector(k);
  const auto h = hilbert_numerator(k);
  const MonomialIdeal sr = stanley_reisner_ideal(k, field);
  if (fmt == OutputFormat::m2) return ok(generators_to_m2(sr.ring(), sr.polys()));
  if (fmt == OutputFormat::json) {
    Json facets = Json::array();
    for (const auto& w : k.facets()) facets.push_back(set_json(w));
    return ok(dump({{"d", o.d},
                    {"m", o.m},
                    {"dimension", k.dimension()},
                    {"f_vector", f},
                    {"hilbert_numerator", h},
                    {"facets", facets},
                    {"stanley_reisner", ideal_to_json(sr)}}));
  }
  std::string s = "dimension: " + std::to_string(k.dimension()) + "\n";
  s += "f-vector: " + join(f) + "\n";
  s += "hilbert numerator: " + join(h) + "\n";
  s += "facets: " + std::to_string(k.facets().size()) + "\n";
  s += "minimal nonfaces: " + sr.to_string() + "\n";
  return ok(s);
}

CommandResult cmd_ideal(const CommandOptions& o) {
  require_dm(o);
  const OutputFormat fmt = parse_format(o.format);
  const Field field = field_of(o);
  Ring ring;
  std::vector<Poly> gens;
  try {
    if (o.which == "I") {
      const MonomialIdeal I = ideal_I(o.d, o.m, field);
      ring = I.ring();
      gens = I.polys();
    } else if (o.which == "J") {
      ring = auxiliary_ring(o.d, o.m, field);
      for (const auto& g : ideal_J_generators(o.d, o.m, ring)) gens.push_back(Poly::monomial(ring, g));
    } else if (o.which == "Q") {
      const UnprojectionInput in = phi_images(o.d, o.m, field);
      ring = unprojection_ring(in);
      gens = unprojection_ideal(in, ring);
    } else if (o.which == "P") {
      if (o.d % 2 != 0) throw UsageError("--which P needs even d");
      const MonomialIdeal P = colon_star(o.d, o.m, field);
      ring = P.ring();
      gens = P.polys();
    } else {
      throw UsageError("--which must be one of I, J, Q, P");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (fmt == OutputFormat::json) return ok(dump(generators_to_json(ring, gens)));
  if (fmt == OutputFormat::m2) return ok(generators_to_m2(ring, gens));
  std::string s = "(";
  for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? ", " : "") + gens[k].to_string();
  return ok(s + ")\n");
}

CommandResult cmd_resolve(const CommandOptions& o) {
  require_dm(o);
  require_caps(o);
  const OutputFormat fmt = parse_format(o.format);
  const Field field = field_of(o);
  VerifyOptions vo;
  try {
    vo.checks = CheckSet::parse(o.checks.value_or("d2,minimal,betti,euler,rank"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ChainComplex c = resolve_cyclic(o.d, o.m, field);
  const VerificationReport rep = verify_complex(c, ideal_I(o.d, o.m, field), vo);

  std::string body;
  if (fmt == OutputFormat::json) body = dump(complex_to_json(c));
  else if (fmt == OutputFormat::m2) body = complex_to_m2(c);
  else body = betti_of_complex(c).to_string();

  std::string report;
  if (fmt == OutputFormat::json) {
    report = dump(report_to_json(rep));
  } else {
    const char* prefix = fmt == OutputFormat::m2 ? "-- " : "";
    auto line = [&](const char* name, const std::optional<bool>& v) {
      if (v) report += std::string(prefix) + name + ": " + (*v ? "ok" : "FAILED") + "\n";
    };
    line("d2", rep.d2_ok);
    line("minimal", rep.minimal_ok);
    line("betti", rep.betti_match);
    line("euler", rep.euler_ok);
    line("rank", rep.rank_ok);
    if (rep.exactness_bound)
      line(("exact up to degree " + std::to_string(*rep.exactness_bound)).c_str(), rep.graded_exactness);
    for (const auto& d : rep.diagnostics) report += std::string(prefix) + "note: " + d + "\n";
  }

  CommandResult res;
  if (o.out) {
    write_text_file(*o.out, body);
    res.out = report;
  } else if (fmt == OutputFormat::json) {
    res.out = dump({{"complex", complex_to_json(c)}, {"report", report_to_json(rep)}});
  } else {
    res.out = body + report;
  }
  if (!rep.all_ok()) {
    res.exit_code = 1;
    std::string names;
    for (const auto& n : rep.failed()) names += (names.empty() ? "" : ", ") + n;
    res.err = "verification failed: " + names + "\n";
  }
  return res;
}

CommandResult cmd_betti(const CommandOptions& o) {
  require_dm(o);
  const OutputFormat fmt = parse_format(o.format);
  if (fmt == OutputFormat::m2) throw UsageError("betti has no m2 output");
  const bool want_formula = o.source == "formula" || o.source == "both";
  const bool want_complex = o.source == "complex" || o.source == "both";
  if (!want_formula && !want_complex) throw UsageError("--source must be formula, complex or both");
  std::optional<BettiTable> formula, built;
  if (want_formula) {
    try {
      formula = expected_betti(o.d, o.m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (want_complex) {
    require_caps(o);
    built = betti_of_complex(resolve_cyclic(o.d, o.m, field_of(o)));
  }
  CommandResult res;
  const bool both = formula && built;
  const bool agree = both && *formula == *built;
  if (fmt == OutputFormat::json) {
    Json j = Json::object();
    if (formula) j["formula"] = betti_to_json(*formula);
    if (built) j["complex"] = betti_to_json(*built);
    if (both) j["agree"] = agree;
    res.out = dump(j);
  } else if (both) {
    res.out = "formula:\n" + formula->to_string() + "complex:\n" + built->to_string() +
              (agree ? "tables agree\n" : "tables differ\n");
  } else {
    res.out = (formula ? formula : built)->to_string();
  }
  if (both && !agree) {
    res.exit_code = 1;
    std::string diff;
    BettiTable all = *formula;
    for (const auto& [key, v] : built->entries) all.entries.emplace(key, v);
    for (const auto& [key, v] : all.entries) {
      const auto a = formula->at(key.first, key.second), b = built->at(key.first, key.second);
      if (a != b)
        diff += "  b(" + std::to_string(key.first) + "," + std::to_string(key.second) + "): formula " +
                std::to_string(a) + ", complex " + std::to_string(b) + "\n";
    }
    res.err = "Betti tables differ:\n" + diff;
  }
  return res;
}

CommandResult cmd_eta(const CommandOptions& o) {
  if (!o.i) throw UsageError("eta needs --i");
  const OutputFormat fmt = parse_format(o.format);
  std::int64_t v = 0;
  try {
    v = eta(o.d, o.m, *o.i);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (fmt == OutputFormat::json) return ok(dump({{"d", o.d}, {"m", o.m}, {"i", *o.i}, {"eta", v}}));
  return ok(std::to_string(v) + "\n");
}

CommandResult run_command(const std::string& name, const CommandOptions& o) {
  try {
    if (name == "faces") return cmd_faces(o);
    if (name == "complex") return cmd_complex(o);
    if (name == "ideal") return cmd_ideal(o);
    if (name == "resolve") return cmd_resolve(o);
    if (name == "betti") return cmd_betti(o);
    if (name == "eta") return cmd_eta(o);
    throw UsageError("unknown command: " + name);
  } catch (const UsageError& e) {
    return {2, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace cyclres
