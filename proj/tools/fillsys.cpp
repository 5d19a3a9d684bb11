#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fillsys/enumerate.hpp"
#include "fillsys/homology.hpp"
#include "fillsys/reduction.hpp"
#include "fillsys/selftest.hpp"
#include "fillsys/verify.hpp"

using namespace fillsys;
using nlohmann::json;

namespace {

// usage and input errors exit 2, failed checks exit 1
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class F>
auto parse_file(const std::string& path, F&& parse) {
  std::string text = read_input(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError(path + ": cannot write");
  out << j.dump(2) << '\n';
}

std::string signed_text(const ChordDiagram& d, int sign) {
  return to_text(d) + ";mark=0;sign=" + (sign < 0 ? "-1" : "+1");
}

std::string matrix_text(const IntMatrix& M) {
  std::ostringstream os;
  for (auto& row : M) {
    os << "  [";
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "]\n";
  }
  return os.str();
}

void check_genus(int g, int lo, int hi) {
  if (g < lo || g > hi)
    throw UsageError("--genus must be in " + std::to_string(lo) + ".." + std::to_string(hi));
}

struct Config {
  int genus = 0, k = 0, threads = 0;
  bool connected = false, trace = false, canonical = false;
  std::string input, json_out, cache;
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> only;
};

int cmd_orbits(const Config& c) {
  check_genus(c.genus, 1, 4);
  if (c.k < 0) throw UsageError("--k must be >= 0");
  if (2 * c.genus + c.k > 9) throw UsageError("2g+k must be at most 9 chords");
  auto cat = c.cache.empty() ? orbit_catalog(c.genus, c.k, c.connected, c.threads)
                             : cached_orbit_catalog(c.cache, c.genus, c.k, c.connected, c.threads);
  std::cout << cat.reps.size() << " orbits";
  if (!c.connected) std::cout << " (" << cat.connected << " connected)";
  std::cout << '\n';
  for (auto& d : cat.reps) std::cout << to_text(d) << '\n';
  if (!c.json_out.empty()) {
    json reps = json::array();
    for (auto& d : cat.reps) reps.push_back(to_json(d));
    write_json(c.json_out, {{"format", 1},
                            {"g", c.genus},
                            {"k", c.k},
                            {"connected_only", c.connected},
                            {"total", cat.total},
                            {"connected", cat.connected},
                            {"reps", reps}});
  }
  return 0;
}

int cmd_boundary(const Config& c) {
  check_genus(c.genus, 1, 4);
  if (c.k < 1) throw UsageError("--k must be >= 1");
  auto rec = parse_file(c.input, [](const std::string& t) { return parse_record(t); });
  auto x = OrientedSystem::from_marker(rec.diagram, rec.mark.value_or(0), rec.sign);
  if (!is_k_filling(x.d, c.genus, c.k))
    throw UsageError(c.input + ": not a " + std::to_string(c.k) + "-filling system of genus " + std::to_string(c.genus));
  json terms = json::array();
  if (c.canonical) {
    auto sum = boundary(x, c.genus, c.k);
    for (auto& [m, s] : sum.terms()) {
      ChordDiagram d(m);
      std::cout << signed_text(d, 1) << " x" << s << '\n';
      terms.push_back({{"diagram", to_json(d)}, {"coefficient", s}});
    }
  } else {
    for (auto& t : boundary_terms(x, c.genus, c.k)) {
      std::cout << signed_text(t.d, t.sign) << '\n';
      terms.push_back({{"diagram", to_json(t.d)}, {"sign", t.sign}});
    }
  }
  if (!c.json_out.empty()) write_json(c.json_out, {{"format", 1}, {"terms", terms}});
  return 0;
}

int cmd_reduce(const Config& c) {
  check_genus(c.genus, 1, 3);
  const SurfaceGroup G = c.genus == 2 ? mcg::group() : SurfaceGroup(c.genus);
  auto L = parse_file(c.input, [&](const std::string& t) { return parse_labelled(t, c.genus); });
  if (!is_k_filling(L.d, c.genus, 0)) throw UsageError(c.input + ": not a 0-filling system");
  if (!validate_labels(L, G)) throw UsageError(c.input + ": labels fail the cycle condition");
  ReduceOptions opt;
  opt.trace = c.trace;
  auto res = reduce(L, c.genus, G, opt);
  if (c.trace)
    for (auto& s : res.steps) std::cout << "# " << s << '\n';
  std::cout << res.terms.terms().size() << " terms, " << res.max_rounds << " extension rounds\n";
  json terms = json::array();
  for (auto& [t, coef] : res.terms.terms()) {
    long k = coef * t.sign;
    auto M = h1_matrix(t.L, c.genus);
    std::cout << "coefficient " << k << '\n' << to_text(t.L, c.genus) << "h1:\n" << matrix_text(M);
    json labels = json::array();
    for (auto& w : t.L.chord_labels()) labels.push_back(format_word(w, c.genus));
    terms.push_back({{"coefficient", k}, {"diagram", to_json(t.L.d)}, {"labels", labels}, {"h1", M}});
  }
  int rc = 0;
  json out{{"format", 1}, {"g", c.genus}, {"rounds", res.max_rounds}, {"terms", terms}};
  if (c.genus == 1) {
    bool ok = modular_symbol_oracle(L, res);
    std::cout << "oracle: " << (ok ? "agrees" : "DISAGREES") << '\n';
    out["oracle"] = ok;
    rc = ok ? 0 : 1;
  }
  if (!c.json_out.empty()) write_json(c.json_out, out);
  return rc;
}

int cmd_verify(const Config& c) {
  check_genus(c.genus, 1, 2);
  auto rep = verify_presentation(c.genus);
  json checks = json::array();
  for (auto& ch : rep.checks) {
    std::cout << (ch.ok ? "ok   " : "FAIL ") << ch.name << "\n       " << ch.detail << '\n';
    checks.push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
  }
  std::cout << (rep.ok ? "presentation confirmed, relations:\n" : "presentation NOT confirmed; claimed relations:\n");
  for (auto& r : rep.relations) std::cout << "  " << r << '\n';
  if (!c.json_out.empty())
    write_json(c.json_out, {{"format", 1}, {"g", c.genus}, {"ok", rep.ok}, {"checks", checks}, {"relations", rep.relations}});
  return rep.ok ? 0 : 1;
}

void print_homology(const SimplicialComplex& K) {
  for (int d = 0; d <= K.dimension(); ++d)
    std::cout << "dim " << d << ": " << K.faces(d).size() << " faces, H~" << d << " = " << format(homology(K, d))
              << '\n';
}

int cmd_theta(const Config& c) {
  if (!c.input.empty()) {
    auto K = parse_file(c.input, [](const std::string& t) { return parse_complex(t); });
    print_homology(K);
    return 0;
  }
  check_genus(c.genus, 1, 3);
  auto rep = theta_sphere_check(c.genus);
  std::cout << "polygon " << rep.polygon << ", facets of size " << rep.facet_size << (rep.pure ? " (pure)" : "")
            << '\n';
  json degrees = json::array();
  for (size_t d = 0; d < rep.reduced.size(); ++d) {
    std::cout << "dim " << d << ": " << rep.face_counts[d] << " faces, H~" << d << " = " << format(rep.reduced[d])
              << '\n';
    degrees.push_back({{"faces", rep.face_counts[d]}, {"betti", rep.reduced[d].betti},
                       {"torsion", rep.reduced[d].torsion.size()}});
  }
  if (rep.sphere_degree >= 0)
    std::cout << "homology sphere S^" << rep.sphere_degree << '\n';
  else
    std::cout << "not a homology sphere\n";
  if (!c.json_out.empty())
    write_json(c.json_out, {{"format", 1}, {"g", c.genus}, {"sphere_degree", rep.sphere_degree}, {"degrees", degrees}});
  return rep.ok ? 0 : 1;
}

int cmd_canon(const Config& c) {
  auto rec = parse_file(c.input, [](const std::string& t) { return parse_record(t); });
  auto x = OrientedSystem::from_marker(rec.diagram, rec.mark.value_or(0), rec.sign);
  const auto& d = x.d;
  auto [cd, s] = canonical_oriented(d);
  auto sym = symmetry(d);
  auto cyc = cycles(d);
  std::cout << signed_text(cd, s * x.sign) << '\n';
  std::cout << "boundary cycles " << cyc.b() << ", genus " << genus(d) << ", " << (is_connected(d) ? "connected" : "disconnected")
            << ", rotation order " << sym.order << " sign " << sym.perm_sign << '\n';
  if (!c.json_out.empty())
    write_json(c.json_out, {{"format", 1},
                            {"canonical", to_json(cd)},
                            {"sign", s * x.sign},
                            {"cycles", cyc.b()},
                            {"genus", genus(d)},
                            {"connected", is_connected(d)},
                            {"symmetry_order", sym.order},
                            {"symmetry_sign", sym.perm_sign}});
  return 0;
}

int cmd_selftest(const Config& c) {
  SelftestOptions opt;
  opt.seed = c.seed;
  opt.threads = c.threads;
  opt.only = c.only;
  auto rs = run_selftest(opt);
  bool all = true;
  for (auto& r : rs) {
    std::cout << format_line(r) << '\n';
    all = all && r.pass;
  }
  if (!c.json_out.empty()) write_json(c.json_out, to_json(rs, c.seed));
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"filling systems of chord diagrams and the Steinberg module of genus-g mapping class groups"};
  app.require_subcommand(1);
  Config c;
  c.threads = default_threads();
  app.add_option("--threads", c.threads, "worker threads (default FILLSYS_THREADS or 1)")->check(CLI::PositiveNumber);

  auto genus = [&](CLI::App* s, bool required) {
    auto o = s->add_option("--genus,-g", c.genus, "surface genus");
    if (required) o->required();
  };
  auto json_opt = [&](CLI::App* s) { s->add_option("--json", c.json_out, "write a JSON report ('-' for stdout)"); };

  auto* orbits = app.add_subcommand("orbits", "orbit representatives of k-filling systems");
  genus(orbits, true);
  orbits->add_option("--k", c.k, "filling degree")->required();
  orbits->add_flag("--connected", c.connected, "connected systems only");
  orbits->add_option("--cache", c.cache, "JSON catalog cache directory");
  json_opt(orbits);

  auto* bnd = app.add_subcommand("boundary", "signed boundary of an oriented k-filling system");
  genus(bnd, true);
  bnd->add_option("--k", c.k, "filling degree")->required();
  bnd->add_option("--input", c.input, "diagram file ('-' for stdin)")->required();
  bnd->add_flag("--canonical", c.canonical, "identify terms up to rotation");
  json_opt(bnd);

  auto* red = app.add_subcommand("reduce", "write a labelled 0-filling system as a sum of translates of S_2g");
  genus(red, true);
  red->add_option("--input", c.input, "labelled diagram file ('-' for stdin)")->required();
  red->add_flag("--trace", c.trace, "print each extension step");
  json_opt(red);

  auto* ver = app.add_subcommand("verify", "check the one-generator presentation");
  genus(ver, true);
  json_opt(ver);

  auto* th = app.add_subcommand("theta", "homology of the dual associahedron boundary, or of a complex file");
  genus(th, false);
  th->add_option("--input", c.input, "complex file, one facet per line");
  json_opt(th);

  auto* can = app.add_subcommand("canon", "canonical rotation and invariants of a diagram");
  can->add_option("--input", c.input, "diagram file ('-' for stdin)")->required();
  json_opt(can);

  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  st->add_option("--seed", c.seed, "seed for the randomized suites");
  st->add_option("--only", c.only, "criterion ids to run");
  json_opt(st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*orbits) return cmd_orbits(c);
    if (*bnd) return cmd_boundary(c);
    if (*red) return cmd_reduce(c);
    if (*ver) return cmd_verify(c);
    if (*th) {
      if (c.input.empty() && !th->count("--genus")) throw UsageError("theta needs --genus or --input");
      return cmd_theta(c);
    }
    if (*can) return cmd_canon(c);
    if (*st) return cmd_selftest(c);
  } catch (const UsageError& e) {
    std::cerr << "fillsys: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fillsys: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
