// Acceptance suite: each criterion prints exactly one PASS/FAIL line and the
// process exits with the number of failed criteria. Run with no arguments
// for the full battery, or pass criterion numbers to run a subset.

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chainpoly/cli.hpp"
#include "chainpoly/verify.hpp"
#include "oracles.hpp"

using namespace chainpoly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

// 1. Chain DP equals brute-force face enumeration for every class with
//    |P| <= 6; class counts per n confirmed against the labeled-relation
//    oracle. Budget: 60 s.
Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::array<std::size_t, 6> expected{1, 2, 5, 16, 63, 318};
  std::size_t total = 0, compared = 0;
  for (int n = 1; n <= 6; ++n) {
    const std::vector<Poset> classes = enumerate_posets(n);
    if (classes.size() != expected[n - 1])
      return {false, "class count at n=" + std::to_string(n) + " is " +
                         std::to_string(classes.size()) + ", expected " +
                         std::to_string(expected[n - 1])};
    if (oracles::labeled_oracle_class_count(n) != classes.size())
      return {false, "labeled-relation oracle disagrees on the class count at n=" + std::to_string(n)};
    total += classes.size();
    for (const Poset& p : classes) {
      const int d = n - 1;
      if (d < 1) continue;
      const Poset q = proper_part(ideal_lattice(p));
      const ChainVector cv = chain_vector(q, d);
      const FVector oracle_f = f_vector_bruteforce(order_complex(q));
      if (oracle_f.f != cv.c)
        return {false, "chain vector disagrees with face enumeration at n=" + std::to_string(n) +
                           " key=" + key_hex(canonical_key(p))};
      ++compared;
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 60.0) return {false, "exceeded the 60 s budget (" + fmt_seconds(elapsed) + ")"};
  return {true, std::to_string(total) + " classes (1/2/5/16/63/318, oracle-confirmed), " +
                    std::to_string(compared) + " exact chain-vector matches in " + fmt_seconds(elapsed)};
}

// 2. Exhaustive strict-range verification over |P| <= 7 with zero
//    falsifications (Boolean d <= 2 recorded informationally). Budget: 5 min.
Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const BatchReport rep = batch_verify(7, 0);
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << rep.posets_tested << " classes in " << fmt_seconds(elapsed);
  if (elapsed >= 300.0) return {false, "exceeded the 5 min budget (" + fmt_seconds(elapsed) + ")"};
  if (rep.falsifications != 0) {
    detail << "; strict ranges falsified at " << rep.falsifications << " class(es):";
    for (const auto& ex : rep.falsification_examples) {
      detail << " [n=" << ex.n << " d=" << ex.d << " key=" << key_hex(ex.key)
             << " c=" << mpz_vec_to_text(ex.c.c);
      // Confirm against the independent enumeration oracle so the failure
      // cannot be blamed on the chain DP.
      bool oracle_confirms = false;
      for (const Poset& p : enumerate_posets(ex.n))
        if (canonical_key(p) == ex.key) {
          const FVector of = f_vector_bruteforce(order_complex(proper_part(ideal_lattice(p))));
          oracle_confirms = (of.f == ex.c.c);
          break;
        }
      detail << (oracle_confirms ? " oracle-confirmed]" : " ORACLE DISAGREES]");
    }
    detail << "; the claim fails for chain lattices with odd d >= 3 (their order complex is a"
              " full simplex, so the ascent is only weak)";
    return {false, detail.str()};
  }
  return {true, detail.str() + ", zero falsifications"};
}

// 3. Sphere/ball dichotomy on |P| <= 6: h_d = 1 plus palindrome iff the
//    ground poset is an antichain, h_d = 0 otherwise, and
//    h_d = (-1)^{d-1} * reduced Euler characteristic throughout.
Outcome criterion3() {
  std::size_t checked = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const IdealLattice lat = ideal_lattice(p);
      const int d = n - 1;
      FVector f{0, {}};
      if (d >= 1) f = to_f_vector(chain_vector(proper_part(lat), d));
      const HVector h = f_to_h(f);
      const mpz_class chi = reduced_euler(f);
      const int sign = (d % 2 == 1) ? 1 : -1;
      const bool sphere_side = (h.h[d] == 1) && dehn_sommerville_check(h);
      const std::string key = "n=" + std::to_string(n) + " key=" + key_hex(canonical_key(p));
      if (h.h[d] != sign * chi) return {false, "h_d vs Euler characteristic mismatch at " + key};
      if (sphere_side != p.is_antichain()) return {false, "sphere/antichain mismatch at " + key};
      if (!p.is_antichain() && h.h[d] != 0) return {false, "ball with h_d != 0 at " + key};
      ++checked;
    }
  return {true, std::to_string(checked) + " lattices, all exact"};
}

// 4. h_i >= h_{d-i} >= 0 up to half dimension for every lattice with |P| <= 7.
Outcome criterion4() {
  std::size_t checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const int d = n - 1;
      FVector f{0, {}};
      if (d >= 1) f = to_f_vector(chain_vector(proper_part(ideal_lattice(p)), d));
      if (!prop4_check(f_to_h(f)))
        return {false, "inequality fails at n=" + std::to_string(n) +
                           " key=" + key_hex(canonical_key(p))};
      ++checked;
    }
  return {true, std::to_string(checked) + " lattices, zero failures"};
}

// 5. Binomial-basis decomposition reconstructs the f-vector exactly: every
//    lattice with |P| <= 7 plus 200 random non-negative h-vectors, d <= 15.
Outcome criterion5() {
  std::size_t checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const int d = n - 1;
      FVector f{0, {}};
      if (d >= 1) f = to_f_vector(chain_vector(proper_part(ideal_lattice(p)), d));
      const HVector h = f_to_h(f);
      if (decompose(h).reconstruct(d < 0 ? 0 : d) != f.f)
        return {false, "reconstruction fails at n=" + std::to_string(n) +
                           " key=" + key_hex(canonical_key(p))};
      ++checked;
    }
  std::mt19937_64 rng(0x5eed0005);
  std::uniform_int_distribution<std::uint64_t> entry(0, std::uint64_t{1} << 40);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 15);
    HVector h{d, std::vector<mpz_class>(d + 1)};
    for (auto& x : h.h) x = mpz_class(static_cast<unsigned long>(entry(rng)));
    if (decompose(h).reconstruct(d) != h_to_f(h).f)
      return {false, "reconstruction fails on a random h-vector, trial " + std::to_string(trial)};
    ++checked;
  }
  return {true, std::to_string(checked) + " exact reconstructions"};
}

// 6. Peak law for 3 <= d <= 30, 0 <= i <= floor((d-1)/2): both window
//    vectors unimodal, plateaus containing d-1-floor((d-i)/2), the parity
//    case-split identity, and peaks meeting [delta, delta+floor(delta/2)].
//    Budget: 1 s.
Outcome criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  std::vector<std::string> window_fails;
  for (int d = 3; d <= 30; ++d) {
    const WindowIndices w = window_indices(d);
    for (int i = 0; i <= w.epsilon; ++i) {
      const int pred = predicted_peak(i, d);
      const int split = (d % 2 == 0 && i % 2 == 0) ? d / 2 + i / 2 - 1 : d / 2 + i / 2;
      if (pred != split)
        return {false, "case-split identity fails at d=" + std::to_string(d) + " i=" + std::to_string(i)};
      for (const auto& v : {basis_vector(d - i, d), tilde_basis_vector(i, d)}) {
        const PeakResult r = peak_interval(v.b);
        const std::string where = std::string(v.kind == BasisVector::Kind::plain ? "b^" : "b~^") +
                                  std::to_string(v.i) + " at d=" + std::to_string(d) +
                                  " i=" + std::to_string(i);
        if (!r.unimodal) return {false, "not unimodal: " + where};
        if (!(r.lo <= pred && pred <= r.hi)) return {false, "plateau misses the index: " + where};
        if (r.hi < w.peak_lo || r.lo > w.peak_hi)
          window_fails.push_back(where + " plateau [" + std::to_string(r.lo) + "," +
                                 std::to_string(r.hi) + "] vs window [" + std::to_string(w.peak_lo) +
                                 "," + std::to_string(w.peak_hi) + "]");
        ++checked;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 1.0) return {false, "exceeded the 1 s budget (" + fmt_seconds(elapsed) + ")"};
  if (!window_fails.empty()) {
    std::string detail = "unimodality, plateau containment and case-split hold on all " +
                         std::to_string(checked) + " vectors, but the peak window misses " +
                         std::to_string(window_fails.size()) + " of them (every even d at i=0," +
                         " where b^d peaks at delta-1): e.g. " + window_fails.front();
    return {false, detail};
  }
  return {true, std::to_string(checked) + " vectors in " + fmt_seconds(elapsed)};
}

// 7. Boundary g-vector relation for every non-Boolean lattice with
//    |P| <= 5 and d >= 2, on the explicit-enumeration path.
Outcome criterion7() {
  std::size_t checked = 0;
  for (int n = 3; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const IdealLattice lat = ideal_lattice(p);
      if (is_boolean(lat) || n - 1 < 2) continue;
      if (!boundary_g_check(lat))
        return {false, "relation fails at n=" + std::to_string(n) +
                           " key=" + key_hex(canonical_key(p))};
      ++checked;
    }
  return {true, std::to_string(checked) + " non-boolean lattices, all exact"};
}

// 8. f <-> h round trip on 1000 random f-vectors with d <= 20, and the
//    defining polynomial identity checked at d+1 evaluation points.
Outcome criterion8() {
  std::mt19937_64 rng(0x5eed0008);
  std::uniform_int_distribution<std::uint64_t> entry(0, std::uint64_t{1} << 62);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 20);
    FVector f{d, std::vector<mpz_class>(d)};
    for (auto& x : f.f) x = mpz_class(static_cast<unsigned long>(entry(rng)));
    const HVector h = f_to_h(f);
    if (h_to_f(h) != f) return {false, "round trip fails at trial " + std::to_string(trial)};
    if (!oracles::fh_equation_holds(f, h))
      return {false, "polynomial identity fails at trial " + std::to_string(trial)};
  }
  return {true, "1000 exact round trips, identity verified at d+1 points each"};
}

// 9. Batch verification output is byte-identical for 1 worker vs all cores.
Outcome criterion9() {
  const BatchReport one = batch_verify(5, 1);
  const BatchReport many = batch_verify(5, 0);
  if (render_text(one) != render_text(many)) return {false, "text output differs across worker counts"};
  if (to_json(one).dump(2) != to_json(many).dump(2))
    return {false, "structured output differs across worker counts"};
  return {true, "n_max=5 output byte-identical for 1 worker vs all cores"};
}

const std::array<std::pair<const char*, std::function<Outcome()>>, 9> kCriteria = {{
    {"oracle equivalence of chain counting", criterion1},
    {"exhaustive strict-range verification to n=7", criterion2},
    {"sphere/ball dichotomy", criterion3},
    {"half-dimension h-inequalities to n=7", criterion4},
    {"binomial-basis reconstruction", criterion5},
    {"peak law of the window vectors", criterion6},
    {"boundary g-vector relation", criterion7},
    {"f/h round trip and defining identity", criterion8},
    {"parallel determinism", criterion9},
}};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int a = 1; a < argc; ++a) {
    const int c = std::atoi(argv[a]);
    if (c < 1 || c > 9) {
      std::cerr << "usage: acceptance [criterion 1-9]...\n";
      return 64;
    }
    selected.push_back(c);
  }
  if (selected.empty())
    for (int c = 1; c <= 9; ++c) selected.push_back(c);

  int failures = 0;
  for (int c : selected) {
    const auto& [name, fn] = kCriteria[c - 1];
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::cout << "criterion " << c << ": " << (out.pass ? "PASS" : "FAIL") << " - " << name
              << (out.detail.empty() ? "" : " (" + out.detail + ")") << std::endl;
  }
  return failures;
}
