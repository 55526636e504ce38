#pragma once

// Quotient Δ-complex of one cusp's fan by the identifications of that cusp
// with itself: d-simplices are orbit classes of (d+1)-cones, vertices are the
// global ray classes.

#include <cstddef>
#include <optional>
#include <vector>

#include "snc/exact_linalg.hpp"
#include "snc/fans.hpp"

namespace snc {

struct Simplex {
  std::size_t id = 0;                  // position within its dimension
  std::vector<std::size_t> vertices;   // ray-class indices, ascending
  std::vector<std::size_t> faces;      // faces[j] omits vertices[j]
  std::size_t cone = Cone::npos;       // representative cone
};

struct DeltaComplex {
  int dim = -1;
  std::vector<std::vector<Simplex>> simplices;  // simplices[d]
  std::vector<std::size_t> vertex_classes;      // ray class of each 0-simplex

  std::size_t count(int d) const {
    return d < 0 || d > dim ? 0 : simplices[static_cast<std::size_t>(d)].size();
  }
  /// 0-simplex id of a ray class.
  std::optional<std::size_t> vertex_of_class(std::size_t ray_class) const;
};

struct QuotientOptions {
  /// Keep simplices with a repeated vertex (e.g. loops) instead of raising
  /// SncConditionViolated; the result is then only a diagnostic.
  bool allow_repeated_vertices = false;
};

DeltaComplex quotient_delta_complex(const FanSystem& fs, std::size_t cusp, QuotientOptions options = {});

struct ChainComplexQ {
  std::vector<RatMatrix> boundary;  // boundary[d] : C_d -> C_{d-1}; boundary[0] has 0 rows

  std::size_t rank_of(int d) const;  // dim C_d
};

/// ∂σ = Σ_j (-1)^{j-1} (face omitting the j-th vertex), j counted from 1.
ChainComplexQ boundary_matrices(const DeltaComplex& dc);

/// Rational Betti numbers; throws NotAComplex when ∂∘∂ != 0.
std::vector<std::size_t> homology_dims(const ChainComplexQ& cc);

struct IntegralHomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};
std::vector<IntegralHomologyGroup> integral_homology(const DeltaComplex& dc);

struct PseudomanifoldReport {
  bool closed = false;
  bool oriented = false;
  std::optional<std::vector<int>> fundamental_class;  // sign per top simplex
  std::vector<std::size_t> betti;
};

/// Throws NotEquidimensional when some simplex is not a face of a top simplex.
PseudomanifoldReport pseudomanifold_report(const DeltaComplex& dc);

/// K/Γ -> simplicial complex obtained by identifying simplices with equal
/// vertex sets.
struct SimplicialCollapse {
  std::vector<std::vector<std::vector<std::size_t>>> simplices;  // vertex sets per dimension
  std::vector<std::vector<std::size_t>> map;                     // map[d][delta id] -> collapsed id
};
SimplicialCollapse simplicial_collapse(const DeltaComplex& dc);

}  // namespace snc
