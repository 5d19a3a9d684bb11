#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fillsys {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

struct SNFResult {
  std::vector<BigInt> diagonal;  // min(rows, cols) entries, d_i | d_{i+1}, zeros last
  int rank = 0;
};
SNFResult smith_normal_form(BigMatrix M);

class SimplicialComplex {
 public:
  // throws if a facet is out of range, repeats a vertex, or contains another
  SimplicialComplex(int vertices, std::vector<std::vector<int>> facets);

  int vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  int dimension() const;
  // sorted faces of the given dimension; dimension -1 is the empty face
  std::vector<std::vector<int>> faces(int dim) const;

 private:
  int vertices_;
  std::vector<std::vector<int>> facets_;  // each sorted
};

// one facet per line, vertex indices separated by spaces; '#' starts a comment
SimplicialComplex parse_complex(std::string_view text);

// column j is the boundary of the j-th face of dimension dim
BigMatrix boundary_matrix(const SimplicialComplex& K, int dim);

struct HomologyGroup {
  long betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  bool is_zero() const { return betti == 0 && torsion.empty(); }
};
// reduced homology in degree i >= 0
HomologyGroup homology(const SimplicialComplex& K, int i);
std::string format(const HomologyGroup& h);

// vertices are the diagonals of a convex N-gon, facets its triangulations
SimplicialComplex associahedron_dual_boundary(int N);
// (a, b) with a < b for each vertex of associahedron_dual_boundary(N)
std::vector<std::pair<int, int>> polygon_diagonals(int N);

struct ThetaReport {
  int g = 0, polygon = 0;
  int facet_size = 0;
  bool pure = false;
  std::vector<size_t> face_counts;      // by dimension, from 0
  std::vector<HomologyGroup> reduced;   // degrees 0..dim
  int sphere_degree = -1;               // unique degree with Z, all else 0; -1 otherwise
  bool ok = false;                      // homology sphere of dimension 2g-2
};
ThetaReport theta_sphere_check(int g);

}  // namespace fillsys
