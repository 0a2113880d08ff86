#pragma once

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chainpoly/errors.hpp"
#include "chainpoly/facenum.hpp"
#include "chainpoly/lattice.hpp"
#include "chainpoly/poset.hpp"
#include "chainpoly/simplicial.hpp"
#include "chainpoly/verify.hpp"

namespace chainpoly {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Exact integers in documents: plain numbers while they fit a signed 64-bit
// value, decimal strings beyond that.

inline json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

inline mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw ParseError(1, "expected an integer or a decimal string");
}

inline json mpz_vec_to_json(const std::vector<mpz_class>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(mpz_to_json(x));
  return a;
}

inline std::vector<mpz_class> mpz_vec_from_json(const json& j) {
  std::vector<mpz_class> out;
  for (const auto& x : j) out.push_back(mpz_from_json(x));
  return out;
}

inline std::string mpz_vec_to_text(const std::vector<mpz_class>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + "]";
}

inline std::string key_hex(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Poset file formats. Text: line 1 "n <count>", then one cover pair "a < b"
// per line. Structured: {"n": <int>, "covers": [[a, b], ...]}.

inline Poset parse_poset_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  bool have_header = false;
  std::vector<std::pair<int, int>> covers;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    if (!have_header) {
      std::string tag;
      if (!(ss >> tag) || tag != "n") throw ParseError(lineno, "expected 'n <count>'");
      if (!(ss >> n) || n < 0) throw ParseError(lineno, "expected a non-negative element count");
      std::string extra;
      if (ss >> extra) throw ParseError(lineno, "trailing tokens after the element count");
      have_header = true;
      continue;
    }
    int a = 0, b = 0;
    std::string rel, extra;
    if (!(ss >> a)) {
      std::istringstream probe(line);
      std::string any;
      if (!(probe >> any)) continue;  // blank line
      throw ParseError(lineno, "expected a cover pair 'a < b'");
    }
    if (!(ss >> rel) || rel != "<" || !(ss >> b)) throw ParseError(lineno, "expected a cover pair 'a < b'");
    if (ss >> extra) throw ParseError(lineno, "trailing tokens after the cover pair");
    covers.emplace_back(a, b);
  }
  if (!have_header) throw ParseError(1, "empty input; expected 'n <count>'");
  return Poset::from_covers(n, covers);
}

inline Poset parse_poset_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
    throw ParseError(1, "structured poset needs fields 'n' and 'covers'");
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& pair : j.at("covers")) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(1, "each cover must be a 2-element array");
    covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return Poset::from_covers(n, covers);
}

inline Poset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(1, std::string("invalid structured document: ") + e.what());
    }
    return parse_poset_json(j);
  }
  std::istringstream ss(text);
  return parse_poset_text(ss);
}

inline std::string poset_to_text(const Poset& p) {
  std::string out = "n " + std::to_string(p.size()) + "\n";
  for (auto [a, b] : p.cover_pairs())
    out += std::to_string(a) + " < " + std::to_string(b) + "\n";
  return out;
}

inline json poset_to_json(const Poset& p) {
  json j;
  j["n"] = p.size();
  json covers = json::array();
  for (auto [a, b] : p.cover_pairs()) covers.push_back(json::array({a, b}));
  j["covers"] = covers;
  return j;
}

// ---------------------------------------------------------------------------
// Analysis document: everything the analyze command knows about one poset.

struct OracleSection {
  FVector f_bruteforce;
  bool f_match = false;
  bool pure = false;
  int dimension = -1;
  std::optional<bool> boundary_relation_ok;  // non-Boolean, d >= 2
  std::optional<bool> boundary_empty;        // Boolean case

  bool operator==(const OracleSection&) const = default;
};

struct DecompositionSection {
  Decomposition decomposition;
  bool reconstruction_ok = false;

  bool operator==(const DecompositionSection&) const = default;
};

struct AnalysisDocument {
  int n = 0;
  std::vector<std::pair<int, int>> covers;
  std::int64_t ideal_count = 0;
  int d = -1;
  bool boolean_lattice = false;
  std::optional<ChainVector> c_vector;
  std::optional<FVector> f_vector;
  std::optional<HVector> h_vector;
  std::optional<GVector> g_vector;
  std::optional<WindowIndices> window;
  std::optional<TheoremReport> theorem;
  bool theorem_asserted = true;
  bool falsification = false;  // after the Boolean d <= 2 rule
  std::optional<bool> dehn_sommerville;
  std::optional<bool> prop4;
  std::optional<OracleSection> oracle;
  std::optional<DecompositionSection> decomposition;

  bool operator==(const AnalysisDocument&) const = default;
};

struct AnalyzeOptions {
  bool oracle = false;
  bool decompose = false;
  int lattice_limit = kIdealGroundDefaultLimit;
};

inline AnalysisDocument analyze_poset(const Poset& p, const AnalyzeOptions& opts = {}) {
  AnalysisDocument doc;
  doc.n = p.size();
  doc.covers = p.cover_pairs();
  const IdealLattice lat = ideal_lattice(p, opts.lattice_limit);
  doc.ideal_count = static_cast<std::int64_t>(lat.ideals.size());
  doc.boolean_lattice = is_boolean(lat);
  doc.d = lattice_length(lat) - 1;
  const int d = doc.d;
  if (d < 0) return doc;  // one-element lattice, nothing else to report

  if (d == 0) {
    doc.c_vector = ChainVector{0, {}};
    doc.f_vector = FVector{0, {}};
  } else {
    const Poset q = proper_part(lat);
    doc.c_vector = chain_vector(q, d);
    doc.f_vector = to_f_vector(*doc.c_vector);
    doc.window = window_indices(d);
    doc.theorem = theorem1_check(*doc.c_vector);
    if (opts.oracle) {
      OracleSection o;
      const SimplicialComplex delta = order_complex(q);
      o.f_bruteforce = f_vector_bruteforce(delta);
      o.f_match = (o.f_bruteforce == *doc.f_vector);
      o.pure = delta.is_pure();
      o.dimension = delta.dimension();
      if (doc.boolean_lattice && d >= 2)
        o.boundary_empty = boundary_complex(delta).facets().empty();
      else if (!doc.boolean_lattice && d >= 2)
        o.boundary_relation_ok = boundary_g_check(lat);
      doc.oracle = std::move(o);
    }
  }
  doc.h_vector = f_to_h(*doc.f_vector);
  doc.g_vector = g_vector(*doc.h_vector);
  doc.dehn_sommerville = dehn_sommerville_check(*doc.h_vector);
  doc.prop4 = prop4_check(*doc.h_vector);
  doc.theorem_asserted = theorem1_asserted(doc.boolean_lattice, d);
  doc.falsification = doc.theorem && doc.theorem->falsification && doc.theorem_asserted;
  if (opts.decompose) {
    DecompositionSection ds;
    ds.decomposition = decompose(*doc.h_vector);
    ds.reconstruction_ok = doc.f_vector->d == 0 ||
                           (ds.decomposition.reconstruct(doc.f_vector->d) == doc.f_vector->f);
    doc.decomposition = std::move(ds);
  }
  return doc;
}

// ---------------------------------------------------------------------------
// JSON serialization. Field names are part of the output contract.

inline json to_json(const WindowIndices& w) {
  return json{{"d", w.d},
              {"delta", w.delta},
              {"epsilon", w.epsilon},
              {"descent_start", w.descent_start},
              {"peak_window", json::array({w.peak_lo, w.peak_hi})}};
}

inline WindowIndices window_from_json(const json& j) {
  WindowIndices w;
  w.d = j.at("d").get<int>();
  w.delta = j.at("delta").get<int>();
  w.epsilon = j.at("epsilon").get<int>();
  w.descent_start = j.at("descent_start").get<int>();
  w.peak_lo = j.at("peak_window")[0].get<int>();
  w.peak_hi = j.at("peak_window")[1].get<int>();
  return w;
}

inline json to_json(const TheoremReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back(json{
        {"index", v.index},
        {"kind", v.kind == TheoremReport::Violation::Kind::ascend_fail ? "ascend-fail" : "descend-fail"}});
  return json{{"d", r.d},
              {"ascending_ok", r.ascending_ok},
              {"descending_ok", r.descending_ok},
              {"window", to_json(r.window)},
              {"violations", violations},
              {"unimodal", r.unimodal},
              {"unimodality_violations", r.unimodality_violations},
              {"falsification", r.falsification}};
}

inline TheoremReport theorem_from_json(const json& j) {
  TheoremReport r;
  r.d = j.at("d").get<int>();
  r.ascending_ok = j.at("ascending_ok").get<bool>();
  r.descending_ok = j.at("descending_ok").get<bool>();
  r.window = window_from_json(j.at("window"));
  for (const auto& v : j.at("violations"))
    r.violations.push_back({v.at("index").get<int>(),
                            v.at("kind").get<std::string>() == "ascend-fail"
                                ? TheoremReport::Violation::Kind::ascend_fail
                                : TheoremReport::Violation::Kind::descend_fail});
  r.unimodal = j.at("unimodal").get<bool>();
  r.unimodality_violations = j.at("unimodality_violations").get<std::vector<int>>();
  r.falsification = j.at("falsification").get<bool>();
  return r;
}

inline json to_json(const BasisVector& b) {
  return json{{"kind", b.kind == BasisVector::Kind::plain ? "plain" : "tilde"},
              {"i", b.i},
              {"d", b.d},
              {"entries", mpz_vec_to_json(b.b)}};
}

inline json to_json(const AnalysisDocument& doc) {
  json j;
  j["poset"] = json{{"n", doc.n}, {"covers", json::array()}};
  for (auto [a, b] : doc.covers) j["poset"]["covers"].push_back(json::array({a, b}));
  j["lattice"] = json{{"ideal_count", doc.ideal_count}, {"d", doc.d}, {"boolean", doc.boolean_lattice}};
  if (doc.c_vector) j["c_vector"] = mpz_vec_to_json(doc.c_vector->c);
  if (doc.f_vector) j["f_vector"] = mpz_vec_to_json(doc.f_vector->f);
  if (doc.h_vector) j["h_vector"] = mpz_vec_to_json(doc.h_vector->h);
  if (doc.g_vector) j["g_vector"] = mpz_vec_to_json(doc.g_vector->g);
  if (doc.window) j["window"] = to_json(*doc.window);
  if (doc.theorem) j["theorem"] = to_json(*doc.theorem);
  j["theorem_asserted"] = doc.theorem_asserted;
  j["falsification"] = doc.falsification;
  if (doc.dehn_sommerville) j["dehn_sommerville"] = *doc.dehn_sommerville;
  if (doc.prop4) j["prop4"] = *doc.prop4;
  if (doc.oracle) {
    json o;
    o["f_bruteforce"] = mpz_vec_to_json(doc.oracle->f_bruteforce.f);
    o["f_match"] = doc.oracle->f_match;
    o["pure"] = doc.oracle->pure;
    o["dimension"] = doc.oracle->dimension;
    if (doc.oracle->boundary_relation_ok) o["boundary_relation_ok"] = *doc.oracle->boundary_relation_ok;
    if (doc.oracle->boundary_empty) o["boundary_empty"] = *doc.oracle->boundary_empty;
    j["oracle"] = o;
  }
  if (doc.decomposition) {
    json terms = json::array();
    for (const auto& t : doc.decomposition->decomposition.terms)
      terms.push_back(json{{"coefficient", mpz_to_json(t.coefficient)}, {"vector", to_json(t.vec)}});
    j["decomposition"] = json{{"terms", terms},
                              {"all_nonnegative", doc.decomposition->decomposition.all_nonnegative},
                              {"reconstruction_ok", doc.decomposition->reconstruction_ok}};
  }
  return j;
}

inline AnalysisDocument analysis_from_json(const json& j) {
  AnalysisDocument doc;
  doc.n = j.at("poset").at("n").get<int>();
  for (const auto& pair : j.at("poset").at("covers"))
    doc.covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  doc.ideal_count = j.at("lattice").at("ideal_count").get<std::int64_t>();
  doc.d = j.at("lattice").at("d").get<int>();
  doc.boolean_lattice = j.at("lattice").at("boolean").get<bool>();
  const int d = doc.d;
  if (j.contains("c_vector")) doc.c_vector = ChainVector{d < 0 ? 0 : d, mpz_vec_from_json(j.at("c_vector"))};
  if (j.contains("f_vector")) doc.f_vector = FVector{d < 0 ? 0 : d, mpz_vec_from_json(j.at("f_vector"))};
  if (j.contains("h_vector")) doc.h_vector = HVector{d < 0 ? 0 : d, mpz_vec_from_json(j.at("h_vector"))};
  if (j.contains("g_vector")) doc.g_vector = GVector{d < 0 ? 0 : d, mpz_vec_from_json(j.at("g_vector"))};
  if (j.contains("window")) doc.window = window_from_json(j.at("window"));
  if (j.contains("theorem")) doc.theorem = theorem_from_json(j.at("theorem"));
  doc.theorem_asserted = j.at("theorem_asserted").get<bool>();
  doc.falsification = j.at("falsification").get<bool>();
  if (j.contains("dehn_sommerville")) doc.dehn_sommerville = j.at("dehn_sommerville").get<bool>();
  if (j.contains("prop4")) doc.prop4 = j.at("prop4").get<bool>();
  if (j.contains("oracle")) {
    OracleSection o;
    const json& oj = j.at("oracle");
    o.f_match = oj.at("f_match").get<bool>();
    o.pure = oj.at("pure").get<bool>();
    o.dimension = oj.at("dimension").get<int>();
    o.f_bruteforce = FVector{o.dimension + 1, mpz_vec_from_json(oj.at("f_bruteforce"))};
    if (oj.contains("boundary_relation_ok")) o.boundary_relation_ok = oj.at("boundary_relation_ok").get<bool>();
    if (oj.contains("boundary_empty")) o.boundary_empty = oj.at("boundary_empty").get<bool>();
    doc.oracle = std::move(o);
  }
  if (j.contains("decomposition")) {
    DecompositionSection ds;
    const json& dj = j.at("decomposition");
    for (const auto& tj : dj.at("terms")) {
      const json& vj = tj.at("vector");
      BasisVector bv{vj.at("kind").get<std::string>() == "plain" ? BasisVector::Kind::plain
                                                                 : BasisVector::Kind::tilde,
                     vj.at("i").get<int>(), vj.at("d").get<int>(), mpz_vec_from_json(vj.at("entries"))};
      ds.decomposition.terms.push_back({mpz_from_json(tj.at("coefficient")), std::move(bv)});
    }
    ds.decomposition.all_nonnegative = dj.at("all_nonnegative").get<bool>();
    ds.reconstruction_ok = dj.at("reconstruction_ok").get<bool>();
    doc.decomposition = std::move(ds);
  }
  return doc;
}

inline json to_json(const BatchReport& r) {
  json j;
  j["n_max"] = r.n_max;
  j["posets_tested"] = r.posets_tested;
  j["lattices_boolean"] = r.lattices_boolean;
  j["lattices_nonboolean"] = r.lattices_nonboolean;
  j["theorem_passes"] = r.theorem_passes;
  j["falsifications"] = r.falsifications;
  j["prop4_failures"] = r.prop4_failures;
  j["prop2_applicable"] = r.prop2_applicable;
  j["prop2_failures"] = r.prop2_failures;
  j["hd_euler_failures"] = r.hd_euler_failures;
  j["oracle_checked"] = r.oracle_checked;
  j["oracle_mismatches"] = r.oracle_mismatches;
  j["boundary_checked"] = r.boundary_checked;
  j["boundary_failures"] = r.boundary_failures;
  j["unimodal_count"] = r.unimodal_count;
  j["nonunimodal_examples"] = json::array();
  for (const auto& e : r.nonunimodal_examples)
    j["nonunimodal_examples"].push_back(json{{"key", key_hex(e.key)},
                                             {"n", e.n},
                                             {"d", e.d},
                                             {"violation_indices", e.violation_indices},
                                             {"c_vector", mpz_vec_to_json(e.c.c)}});
  j["falsification_examples"] = json::array();
  for (const auto& e : r.falsification_examples)
    j["falsification_examples"].push_back(
        json{{"key", key_hex(e.key)}, {"n", e.n}, {"d", e.d}, {"c_vector", mpz_vec_to_json(e.c.c)}});
  j["boolean_informational"] = json::array();
  for (const auto& e : r.boolean_informational)
    j["boolean_informational"].push_back(json{{"key", key_hex(e.key)},
                                              {"n", e.n},
                                              {"d", e.d},
                                              {"c_vector", mpz_vec_to_json(e.c.c)},
                                              {"raw_falsification", e.raw_falsification}});
  return j;
}

// ---------------------------------------------------------------------------
// Text rendering. Deterministic given the same document.

inline std::string render_text(const AnalysisDocument& doc) {
  std::ostringstream out;
  out << "poset: n=" << doc.n << "\ncovers:";
  for (auto [a, b] : doc.covers) out << ' ' << a << '<' << b;
  out << "\nlattice: ideals=" << doc.ideal_count << " d=" << doc.d
      << " boolean=" << (doc.boolean_lattice ? "yes" : "no") << '\n';
  if (doc.c_vector) out << "c-vector: " << mpz_vec_to_text(doc.c_vector->c) << '\n';
  if (doc.f_vector) out << "f-vector: " << mpz_vec_to_text(doc.f_vector->f) << '\n';
  if (doc.h_vector) out << "h-vector: " << mpz_vec_to_text(doc.h_vector->h) << '\n';
  if (doc.g_vector) out << "g-vector: " << mpz_vec_to_text(doc.g_vector->g) << '\n';
  if (doc.window)
    out << "window: delta=" << doc.window->delta << " epsilon=" << doc.window->epsilon
        << " descent-start=" << doc.window->descent_start << " peak-window=["
        << doc.window->peak_lo << "," << doc.window->peak_hi << "]\n";
  if (doc.dehn_sommerville)
    out << "dehn-sommerville: " << (*doc.dehn_sommerville ? "yes" : "no") << '\n';
  if (doc.theorem) {
    const auto& t = *doc.theorem;
    out << "theorem: ascending=" << (t.ascending_ok ? "ok" : "FAIL")
        << " descending=" << (t.descending_ok ? "ok" : "FAIL")
        << " unimodal=" << (t.unimodal ? "yes" : "no")
        << " asserted=" << (doc.theorem_asserted ? "yes" : "no") << '\n';
    for (const auto& v : t.violations)
      out << "  violation: index=" << v.index << " kind="
          << (v.kind == TheoremReport::Violation::Kind::ascend_fail ? "ascend-fail" : "descend-fail")
          << '\n';
  }
  if (doc.prop4) out << "prop4: " << (*doc.prop4 ? "holds" : "FAILS") << '\n';
  if (doc.oracle) {
    out << "oracle: f-bruteforce=" << mpz_vec_to_text(doc.oracle->f_bruteforce.f)
        << " match=" << (doc.oracle->f_match ? "yes" : "NO")
        << " pure=" << (doc.oracle->pure ? "yes" : "no") << " dim=" << doc.oracle->dimension << '\n';
    if (doc.oracle->boundary_relation_ok)
      out << "boundary: relation " << (*doc.oracle->boundary_relation_ok ? "holds" : "FAILS") << '\n';
    if (doc.oracle->boundary_empty)
      out << "boundary: " << (*doc.oracle->boundary_empty ? "empty (sphere)" : "NONEMPTY") << '\n';
  }
  if (doc.decomposition) {
    out << "decomposition:\n";
    for (const auto& t : doc.decomposition->decomposition.terms)
      out << "  " << t.coefficient.get_str() << " * "
          << (t.vec.kind == BasisVector::Kind::plain ? "b^" : "b~^") << t.vec.i << " = "
          << mpz_vec_to_text(t.vec.b) << '\n';
    out << "  nonnegative=" << (doc.decomposition->decomposition.all_nonnegative ? "yes" : "no")
        << " reconstructs-f=" << (doc.decomposition->reconstruction_ok ? "yes" : "NO") << '\n';
  }
  out << "verdict: " << (doc.falsification ? "FALSIFIED" : "PASS") << '\n';
  return out.str();
}

inline std::string render_text(const BatchReport& r) {
  std::ostringstream out;
  out << "batch verification up to n=" << r.n_max << '\n'
      << "posets tested:        " << r.posets_tested << '\n'
      << "boolean lattices:     " << r.lattices_boolean << '\n'
      << "non-boolean lattices: " << r.lattices_nonboolean << '\n'
      << "theorem passes:       " << r.theorem_passes << '\n'
      << "falsifications:       " << r.falsifications << '\n'
      << "prop4 failures:       " << r.prop4_failures << '\n'
      << "prop2 checked/failed: " << r.prop2_applicable << "/" << r.prop2_failures << '\n'
      << "hd-euler failures:    " << r.hd_euler_failures << '\n'
      << "oracle checked/bad:   " << r.oracle_checked << "/" << r.oracle_mismatches << '\n'
      << "boundary checked/bad: " << r.boundary_checked << "/" << r.boundary_failures << '\n'
      << "unimodal:             " << r.unimodal_count << '\n';
  for (const auto& e : r.nonunimodal_examples) {
    out << "nonunimodal: key=" << key_hex(e.key) << " n=" << e.n << " d=" << e.d << " indices=[";
    for (std::size_t i = 0; i < e.violation_indices.size(); ++i)
      out << (i ? "," : "") << e.violation_indices[i];
    out << "] c=" << mpz_vec_to_text(e.c.c) << '\n';
  }
  for (const auto& e : r.falsification_examples)
    out << "FALSIFICATION: key=" << key_hex(e.key) << " n=" << e.n << " d=" << e.d
        << " c=" << mpz_vec_to_text(e.c.c) << '\n';
  for (const auto& e : r.boolean_informational)
    out << "informational (boolean, d<=2): key=" << key_hex(e.key) << " n=" << e.n << " d=" << e.d
        << " c=" << mpz_vec_to_text(e.c.c) << '\n';
  out << "verdict: " << (r.clean() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace chainpoly
