#include "fillsys/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "fillsys/enumerate.hpp"
#include "fillsys/homology.hpp"
#include "fillsys/reduction.hpp"
#include "fillsys/verify.hpp"

namespace fillsys {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
  double limit = 0;  // seconds, 0 for none
};

Outcome orbit_counts(const SelftestOptions& o) {
  auto g1k0 = orbit_catalog(1, 0, false, o.threads);
  auto g1k1 = orbit_catalog(1, 1, false, o.threads);
  auto g2k0 = orbit_catalog(2, 0, false, o.threads);
  std::ostringstream os;
  os << "g1: " << g1k0.total << " 0-filling, " << g1k1.total << " 1-filling; g2: " << g2k0.total
     << " 0-filling, " << g2k0.connected << " connected";
  bool ok = g1k0.total == 1 && g1k1.total == 1 && g2k0.total == 4 && g2k0.connected == 3;
  return {ok, os.str(), 1.0};
}

Outcome relation_orbits(const SelftestOptions& o) {
  auto c = orbit_catalog(2, 1, true, o.threads);
  return {c.reps.size() == 18, std::to_string(c.reps.size()) + " connected 1-filling orbits in genus 2", 5.0};
}

Outcome symmetries(const SelftestOptions&) {
  auto s1 = symmetry(zigzag(2));
  auto p0 = symmetry(phi_labelled(0).d), p1 = symmetry(phi_labelled(1).d), p2 = symmetry(phi_labelled(2).d);
  std::ostringstream os;
  os << "g1 phi0 order " << s1.order << " sign " << s1.perm_sign << "; g2 phi0 order " << p0.order << ", phi1 order "
     << p1.order << ", phi2 order " << p2.order << " sign " << p2.perm_sign;
  bool ok = s1.order == 4 && s1.perm_sign == -1 && p0.order == 1 && p1.order == 1 && p2.order == 8 &&
            p2.perm_sign == -1;
  ok = ok && stabilizer_relation(zigzag(2), 1) == std::make_pair(4, -1) &&
       !stabilizer_relation(phi_labelled(0).d, 2) && !stabilizer_relation(phi_labelled(1).d, 2) &&
       stabilizer_relation(phi_labelled(2).d, 2) == std::make_pair(8, -1);
  return {ok, os.str()};
}

std::string failures(const PresentationReport& r) {
  std::ostringstream os;
  int bad = 0;
  for (auto& c : r.checks)
    if (!c.ok) os << (bad++ ? "; " : "") << c.name << " [" << c.detail << "]";
  if (!bad) os << r.checks.size() << " checks hold: ";
  if (!bad)
    for (size_t i = 0; i < r.relations.size(); ++i) os << (i ? ", " : "") << r.relations[i];
  return os.str();
}

Outcome genus1_presentation(const SelftestOptions&) {
  auto r = verify_presentation(1);
  return {r.ok, failures(r)};
}

Outcome genus2_presentation(const SelftestOptions&) {
  auto r = verify_presentation(2);
  return {r.ok, failures(r), 30.0};
}

using Mat2 = std::array<long, 4>;  // row major

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Word power_word(long a, long b) {
  Word w;
  for (long i = 0; i < std::abs(a); ++i) w.push_back(a > 0 ? 1 : -1);
  for (long i = 0; i < std::abs(b); ++i) w.push_back(b > 0 ? 2 : -2);
  return w;
}

// labels are the columns of M
LabelledDiagram translate1(const LabelledDiagram& L, const Mat2& M, const SurfaceGroup& G) {
  SurfaceAutomorphism a{{power_word(M[0], M[2]), power_word(M[1], M[3])}};
  return apply_to_diagram(a, L, G);
}

Mat2 random_gl2(std::mt19937_64& rng) {
  static const Mat2 gens[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}, {0, 1, 1, 0}};
  Mat2 M{1, 0, 0, 1};
  int len = std::uniform_int_distribution<int>(1, 24)(rng);
  for (int i = 0; i < len; ++i) M = mul(M, gens[std::uniform_int_distribution<int>(0, 4)(rng)]);
  return M;
}

// image of a genus-1 0-filling under (u, v) -> [v] - [u] on slopes up to sign
void symbol(std::map<std::pair<long, long>, long>& acc, const LabelledOriented& x) {
  auto lab = x.L.chord_labels();
  auto slope = [](std::vector<long> v) {
    if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) return std::make_pair(-v[0], -v[1]);
    return std::make_pair(v[0], v[1]);
  };
  acc[slope(exponent_sums(lab[1], 1))] += x.sign;
  acc[slope(exponent_sums(lab[0], 1))] -= x.sign;
}

Outcome genus1_reduction(const SelftestOptions& o) {
  const SurfaceGroup G(1);
  std::mt19937_64 rng(o.seed);
  const auto phi = identity_labelled(1);
  const auto rho = rho0_labelled();
  int agree = 0, rounds_ok = 0, boundary_ok = 0;
  const int runs = 120;
  for (int i = 0; i < runs; ++i) {
    auto M = random_gl2(rng);
    int r = std::uniform_int_distribution<int>(0, 3)(rng);
    auto L = rotate(translate1(phi, M, G), r);
    auto res = reduce(L, 1, G);
    if (res.max_rounds <= 2) ++rounds_ok;
    if (modular_symbol_oracle(L, res)) ++agree;
    // the oracle kills boundaries of translated relations
    std::map<std::pair<long, long>, long> acc;
    for (auto& f : boundary_terms(LabelledOriented{translate1(rho, M, G), 1}, 1, 1)) symbol(acc, f);
    if (std::all_of(acc.begin(), acc.end(), [](auto& e) { return e.second == 0; })) ++boundary_ok;
  }
  std::ostringstream os;
  os << agree << "/" << runs << " oracle agreement, " << rounds_ok << "/" << runs << " within 2 rounds, "
     << boundary_ok << "/" << runs << " relation boundaries vanish";
  return {agree == runs && rounds_ok == runs && boundary_ok == runs, os.str()};
}

std::vector<mcg::MCWord> words_up_to(int len) {
  std::vector<mcg::Token> gens{{'R', 0, false}};
  for (int i = 0; i < 5; ++i) gens.push_back({'T', i, false});
  for (int i = 0; i < 5; ++i) gens.push_back({'S', i, false});
  std::vector<mcg::MCWord> out{{}};
  size_t from = 0;
  for (int l = 1; l <= len; ++l) {
    size_t to = out.size();
    for (size_t i = from; i < to; ++i)
      for (auto& t : gens) {
        auto w = out[i];
        w.push_back(t);
        out.push_back(std::move(w));
      }
    from = to;
  }
  return out;
}

bool term_ok(const LabelledOriented& t, const SurfaceGroup& G, const IntMatrix& J) {
  if (!(t.L.d == zigzag(4)) || !is_connected(t.L.d) || !is_salient(t.L.d) || !validate_labels(t.L, G)) return false;
  try {
    auto M = h1_matrix(t.L, 2);
    long det = determinant(M);
    return (det == 1 || det == -1) && preserves_form(M, J);
  } catch (const std::logic_error&) {
    return false;
  }
}

std::vector<IntMatrix> matrices(const ReductionResult& r) {
  std::vector<IntMatrix> out;
  for (auto& [t, c] : r.terms.terms())
    for (long k = 0; k < std::abs(c); ++k) out.push_back(h1_matrix(t.L, 2));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome genus2_reduction(const SelftestOptions&) {
  const auto& G = mcg::group();
  const auto J = crossing_form(2);
  auto words = words_up_to(3);
  size_t runs = 0, good = 0, stable = 0;
  int deepest = 0;
  std::string first_bad;
  for (int type = 0; type < 3; ++type) {
    auto base = phi_labelled(type);
    for (auto& w : words) {
      auto L = apply_to_diagram(mcg::evaluate(w), base, G);
      ++runs;
      bool ok = false;
      try {
        auto res = reduce(L, 2, G);
        deepest = std::max(deepest, res.max_rounds);
        ok = res.max_rounds <= 4;
        for (auto& [t, c] : res.terms.terms()) ok = ok && term_ok(t, G, J);
        ReduceOptions alt;
        alt.prefer_last_tail = true;
        if (ok && matrices(res) == matrices(reduce(L, 2, G, alt))) ++stable;
      } catch (const std::exception&) {
        ok = false;
      }
      if (ok) ++good;
      if (!ok && first_bad.empty()) first_bad = mcg::format(w) + " phi" + std::to_string(type);
    }
  }
  std::ostringstream os;
  os << good << "/" << runs << " translates of phi0, phi1, phi2 by words of length <= 3 reduce cleanly, deepest "
     << deepest << " rounds, " << stable << "/" << runs << " stable under tail tie-breaking";
  if (!first_bad.empty()) os << "; first failure " << first_bad;
  return {good == runs && stable == runs, os.str()};
}

Outcome disconnected(const SelftestOptions& o) {
  const auto& G = mcg::group();
  auto cat = orbit_catalog(2, 0, false, o.threads);
  size_t orbits = 0;
  for (auto& d : cat.reps) orbits += !is_connected(d);
  // labelled disconnected faces of 1-filling systems built on phi0 translates
  std::vector<LabelledDiagram> samples;
  for (auto& w : words_up_to(1)) {
    auto base = apply_to_diagram(mcg::evaluate(w), phi_labelled(0), G);
    const int N = base.d.points();
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b) {
        auto al = insert_chord(base, a, b, G);
        if (!al || !is_k_filling(al->d, 2, 1)) continue;
        for (auto& f : boundary_terms(LabelledOriented{*al, 1}, 2, 1))
          if (!is_connected(f.L.d)) samples.push_back(f.L);
      }
  }
  size_t empty = 0, certs = 0, single = 0;
  for (auto& L : samples) {
    if (reduce(L, 2, G).terms.is_zero()) ++empty;
    for (auto& c : connection_relations(L, 2, G)) {
      ++certs;
      single += c.boundary.size() == 1;
    }
  }
  std::ostringstream os;
  os << orbits << " disconnected orbit; " << empty << "/" << samples.size() << " labelled samples reduce to 0; "
     << single << "/" << certs << " separating insertions have a single boundary term";
  bool ok = orbits == 1 && !samples.empty() && empty == samples.size() && certs > 0 && single == certs;
  return {ok, os.str()};
}

Outcome boundary_square(const SelftestOptions& o) {
  auto cat = orbit_catalog(2, 2, false, o.threads);
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<OrientedSystem> samples;
  for (int i = 0; i < 50; ++i) {
    const auto& d = cat.reps[std::uniform_int_distribution<size_t>(0, cat.reps.size() - 1)(rng)];
    int r = std::uniform_int_distribution<int>(0, d.points() - 1)(rng);
    samples.push_back({rotate(d, r), std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
  }
  auto rep = boundary_squared_zero(samples, 2, 2);
  std::string detail = rep.ok ? "d^2 = 0 on 50 random genus-2 2-filling systems drawn from " +
                                    std::to_string(cat.reps.size()) + " orbits"
                              : "fails on " + rep.offending;
  return {rep.ok, detail};
}

Outcome theta(const SelftestOptions&) {
  std::ostringstream os;
  bool ok = true;
  for (int g = 1; g <= 3; ++g) {
    auto r = theta_sphere_check(g);
    ok = ok && r.ok;
    os << (g > 1 ? "; " : "") << "g=" << g << ": ";
    if (r.sphere_degree >= 0)
      os << "S^" << r.sphere_degree;
    else
      os << "not a homology sphere";
  }
  return {ok, os.str(), 60.0};
}

struct Entry {
  const char* name;
  std::function<Outcome(const SelftestOptions&)> fn;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t{
      {"orbit counts", orbit_counts},
      {"genus-2 relation orbits", relation_orbits},
      {"stabilizers", symmetries},
      {"genus-1 presentation", genus1_presentation},
      {"genus-2 presentation", genus2_presentation},
      {"genus-1 reduction", genus1_reduction},
      {"genus-2 reduction", genus2_reduction},
      {"disconnected systems", disconnected},
      {"boundary squared", boundary_square},
      {"theta spheres", theta},
  };
  return t;
}

}  // namespace

CriterionResult run_criterion(int id, const SelftestOptions& opt) {
  const auto& t = table();
  if (id < 1 || id > static_cast<int>(t.size())) throw std::out_of_range("no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.name = t[id - 1].name;
  auto start = Clock::now();
  Outcome out{false, ""};
  try {
    out = t[id - 1].fn(opt);
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.pass = out.pass;
  r.detail = out.detail;
  if (out.limit > 0 && r.seconds >= out.limit) {
    r.pass = false;
    std::ostringstream os;
    os << "; took " << r.seconds << " s, limit " << out.limit << " s";
    r.detail += os.str();
  }
  return r;
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(table().size()); ++id)
    if (opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), id) != opt.only.end())
      out.push_back(run_criterion(id, opt));
  return out;
}

nlohmann::json to_json(const std::vector<CriterionResult>& rs, std::uint64_t seed) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (auto& r : rs) {
    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    all = all && r.pass;
  }
  return {{"format", 1}, {"seed", seed}, {"pass", all}, {"criteria", arr}};
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ": " << r.detail;
  return os.str();
}

}  // namespace fillsys
