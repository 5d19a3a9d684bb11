#include "fillsys/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace fillsys {

int default_threads() {
  if (const char* e = std::getenv("FILLSYS_THREADS")) {
    int t = std::atoi(e);
    if (t > 0) return t;
  }
  return 1;
}

namespace {

// extend the partial matching m; p0 is a lower bound on the least free point.
// fn returns true to stop the search.
template <class F>
bool backtrack(std::vector<int>& m, int p0, const F& fn) {
  const int N = static_cast<int>(m.size());
  int p = p0;
  while (p < N && m[p] >= 0) ++p;
  if (p == N) return fn(m);
  for (int q = p + 2; q < N; ++q) {
    if (m[q] >= 0 || (p == 0 && q == N - 1)) continue;
    m[p] = q;
    m[q] = p;
    bool stop = backtrack(m, p + 1, fn);
    m[p] = m[q] = -1;
    if (stop) return true;
  }
  return false;
}

void check_range(int n) {
  if (n < 1 || n > 9) throw std::out_of_range("chord count must be in 1..9");
}

}  // namespace

void for_each_matching(int n, const std::function<void(const std::vector<int>&)>& fn) {
  check_range(n);
  std::vector<int> m(2 * n, -1);
  backtrack(m, 0, [&](const std::vector<int>& mm) {
    fn(mm);
    return false;
  });
}

std::vector<ChordDiagram> enumerate_matchings(int n) {
  std::vector<ChordDiagram> out;
  for_each_matching(n, [&](const std::vector<int>& m) { out.emplace_back(m); });
  return out;
}

OrbitCatalog orbit_catalog(int g, int k, bool connected_only, int threads) {
  OrbitCatalog cat;
  cat.g = g;
  cat.k = k;
  cat.connected_only = connected_only;
  if (g < 1 || k < 0 || k > 4 * g - 3) return cat;
  const int n = 2 * g + k;
  check_range(n);
  if (threads <= 0) threads = default_threads();

  // partition by the mate of point 0
  std::vector<int> firsts;
  for (int q = 2; q < 2 * n - 1; ++q) firsts.push_back(q);
  std::set<std::vector<int>> found;
  std::mutex mu;
  auto work = [&](size_t stride, size_t offset) {
    std::set<std::vector<int>> local;
    for (size_t i = offset; i < firsts.size(); i += stride) {
      std::vector<int> m(2 * n, -1);
      m[0] = firsts[i];
      m[firsts[i]] = 0;
      backtrack(m, 1, [&](const std::vector<int>& mm) {
        ChordDiagram d(mm);
        if (is_k_filling(d, g, k)) local.insert(canonical_form(d).matching());
        return false;
      });
    }
    std::lock_guard<std::mutex> lk(mu);
    found.insert(local.begin(), local.end());
  };
  const size_t T = std::max<size_t>(1, std::min<size_t>(threads, firsts.size()));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < T; ++t) pool.emplace_back(work, T, t);
  work(T, 0);
  for (auto& th : pool) th.join();

  for (auto& m : found) {
    ChordDiagram d(m);
    bool conn = is_connected(d);
    ++cat.total;
    if (conn) ++cat.connected;
    if (!connected_only || conn) cat.reps.push_back(std::move(d));
  }
  return cat;
}

OrbitCatalog cached_orbit_catalog(const std::string& cache_dir, int g, int k, bool connected_only,
                                  int threads) {
  namespace fs = std::filesystem;
  fs::path file = fs::path(cache_dir) / ("catalog_g" + std::to_string(g) + "_k" + std::to_string(k) +
                                         (connected_only ? "_conn" : "_all") + ".json");
  if (fs::exists(file)) {
    try {
      std::ifstream in(file);
      auto j = nlohmann::json::parse(in);
      if (j.at("format") == 1 && j.at("g") == g && j.at("k") == k && j.at("connected_only") == connected_only) {
        OrbitCatalog cat;
        cat.g = g;
        cat.k = k;
        cat.connected_only = connected_only;
        cat.total = j.at("total");
        cat.connected = j.at("connected");
        for (auto& r : j.at("reps")) cat.reps.push_back(diagram_from_json(r));
        return cat;
      }
    } catch (const std::exception&) {
      // stale or corrupt cache: rebuild below
    }
  }
  OrbitCatalog cat = orbit_catalog(g, k, connected_only, threads);
  nlohmann::json reps = nlohmann::json::array();
  for (auto& d : cat.reps) reps.push_back(to_json(d));
  nlohmann::json j{{"format", 1},         {"g", g},
                   {"k", k},              {"connected_only", connected_only},
                   {"total", cat.total},  {"connected", cat.connected},
                   {"reps", reps}};
  fs::create_directories(cache_dir);
  std::ofstream(file) << j.dump(1) << '\n';
  return cat;
}

std::optional<ChordDiagram> find_filling(int g, int k) {
  if (g < 1 || k < 0) return std::nullopt;
  check_range(2 * g + k);
  std::vector<int> m(2 * (2 * g + k), -1);
  std::optional<ChordDiagram> out;
  backtrack(m, 0, [&](const std::vector<int>& mm) {
    ChordDiagram d(mm);
    if (!is_k_filling(d, g, k)) return false;
    out = std::move(d);
    return true;
  });
  return out;
}

ArityReport max_arity_check(int g) {
  if (g < 1 || g > 2) throw std::out_of_range("max_arity_check supports g in {1,2}");
  ArityReport rep;
  // every cycle of a filling system has length >= 3 on 2n points with k+1
  // cycles: 3(k+1) <= 2(2g+k), i.e. k <= 4g-3 and n <= 6g-3
  rep.bound_holds = true;
  for (int k = 0; k <= 8 * g; ++k)
    if (3 * (k + 1) <= 2 * (2 * g + k) && k > 4 * g - 3) rep.bound_holds = false;

  const int top = 6 * g - 3;
  bool exists = find_filling(g, 4 * g - 3).has_value();
  rep.max_chords = exists ? top : 0;

  // enumerate past the bound where it is cheap
  bool clean = true;
  const int past = top + 1;
  if (past <= 5) {
    rep.exhaustive = true;
    for_each_matching(past, [&](const std::vector<int>& m) {
      ChordDiagram d(m);
      for (int k = 0; 2 * g + k <= past; ++k)
        if (is_k_filling(d, g, k)) clean = false;
    });
  }
  rep.ok = exists && rep.bound_holds && clean;
  return rep;
}

}  // namespace fillsys
