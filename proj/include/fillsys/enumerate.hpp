#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fillsys/diagram.hpp"

namespace fillsys {

// every non-adjacent perfect matching on 2n points, once each; 1 <= n <= 9
void for_each_matching(int n, const std::function<void(const std::vector<int>&)>& fn);
std::vector<ChordDiagram> enumerate_matchings(int n);

struct OrbitCatalog {
  int g = 0, k = 0;
  bool connected_only = false;
  std::vector<ChordDiagram> reps;  // canonical, sorted
  size_t total = 0;                // orbits of k-filling systems
  size_t connected = 0;            // of which connected
};

// threads <= 0 picks FILLSYS_THREADS or 1
OrbitCatalog orbit_catalog(int g, int k, bool connected_only, int threads = 0);
// same, backed by a JSON file in cache_dir keyed by (g, k, connected)
OrbitCatalog cached_orbit_catalog(const std::string& cache_dir, int g, int k, bool connected_only,
                                  int threads = 0);

// first k-filling system in enumeration order, if any
std::optional<ChordDiagram> find_filling(int g, int k);

struct ArityReport {
  bool ok = false;
  int max_chords = 0;         // largest chord count admitting a filling system
  bool bound_holds = false;   // 3(k+1) <= 2(2g+k) forces k <= 4g-3
  bool exhaustive = false;    // diagrams past the bound were enumerated
};
ArityReport max_arity_check(int g);

int default_threads();

}  // namespace fillsys
