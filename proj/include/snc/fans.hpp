#pragma once

// Simplicial lattice fans over a finite window of cusps, glued by unimodular
// identifications. An infinite Γ-admissible collection is represented by a
// window of cones together with generators of the identification groupoid;
// an identification acts on a window ray exactly when the image is again a
// window ray, and on a window cone exactly when the image is a window cone.

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snc/exact_linalg.hpp"

namespace snc {

/// Inclusion U(F') ⊂ U(F) of the lattice of a parent cusp F'; `matrix` has
/// shape rank(F) x rank(F').
struct ParentEmbedding {
  std::string parent;
  IntMatrix matrix;
};

struct CuspLabel {
  std::string name;
  std::size_t lattice_rank = 0;
  std::vector<ParentEmbedding> parent_embeddings;
};

struct Cone {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::size_t cusp = 0;
  std::vector<IntVector> rays;  // primitive, lexicographically sorted
  std::size_t id = npos;

  std::size_t dim() const noexcept { return rays.size(); }
};

struct ConePairing {
  std::size_t source;  // cone id
  std::size_t target;  // cone id, image of `source` under the identification
};

struct Identification {
  IntMatrix matrix;
  std::size_t source = 0;  // cusp index
  std::size_t target = 0;  // cusp index
  std::vector<ConePairing> cone_pairing;
};

/// Raw cone data, before canonicalization.
struct ConeSpec {
  std::string cusp;
  std::vector<IntVector> rays;
};

struct IdentificationSpec {
  IntMatrix matrix;
  std::string source;
  std::string target;
};

class FanSystem {
 public:
  /// Validates and canonicalizes: rays are primitivized and sorted, faces of
  /// every cone are added, cones are ordered by (cusp, dimension, rays) and
  /// numbered in that order. Non-simplicial cones, singular or non-square
  /// identifications and non-saturated embeddings are rejected.
  static FanSystem build(std::vector<CuspLabel> cusps,
                         const std::vector<ConeSpec>& cones,
                         const std::vector<IdentificationSpec>& identifications);

  const std::vector<CuspLabel>& cusps() const noexcept { return cusps_; }
  const std::vector<Cone>& cones() const noexcept { return cones_; }
  const std::vector<Identification>& identifications() const noexcept { return identifications_; }

  const Cone& cone(std::size_t id) const { return cones_.at(id); }
  std::optional<std::size_t> find_cone(std::size_t cusp, std::vector<IntVector> rays) const;
  std::optional<std::size_t> cusp_index(std::string_view name) const;

  std::vector<std::size_t> cones_of(std::size_t cusp, std::size_t dim) const;
  /// Cones that are not a proper face of another cone of the same cusp.
  std::vector<std::size_t> maximal_cones() const;
  /// Ids of the 1-dimensional cones spanned by each ray of `c`, in ray order.
  std::vector<std::size_t> ray_ids(const Cone& c) const;
  std::size_t dimension() const;  // largest cone dimension

  /// Set on every subdivision output: the result is a refinement whose
  /// projectivity (existence of a polarization function) is not certified.
  bool projectivity_unchecked() const noexcept { return projectivity_unchecked_; }
  void mark_projectivity_unchecked() noexcept { projectivity_unchecked_ = true; }

  std::vector<ConeSpec> cone_specs(bool maximal_only = true) const;
  std::vector<IdentificationSpec> identification_specs() const;

  /// Same cusps and identifications, different cones.
  FanSystem with_cones(const std::vector<ConeSpec>& cones) const;

  friend bool operator==(const FanSystem& a, const FanSystem& b);

 private:
  std::vector<CuspLabel> cusps_;
  std::vector<Cone> cones_;
  std::vector<Identification> identifications_;
  std::map<std::pair<std::size_t, std::vector<IntVector>>, std::size_t> index_;
  bool projectivity_unchecked_ = false;
};

// ---------------------------------------------------------------------------
// Cone-level operations

/// All `dim`-element subsets of the rays, each keeping the inherited order.
/// dim 0 yields the zero cone.
std::vector<Cone> faces(const Cone& c, std::size_t dim);

/// Index of the ray lattice in its saturation (1 iff smooth).
Integer multiplicity(const Cone& c);
bool is_smooth(const Cone& c);

/// Lattice points p = Σ λ_i r_i of the span with every λ_i in [0, 1), p != 0,
/// returned with their coefficients.
struct ParallelepipedPoint {
  IntVector point;
  RatVector coefficients;
};
std::vector<ParallelepipedPoint> parallelepiped_points(const Cone& c);

// ---------------------------------------------------------------------------
// Groupoid closure

struct RayClass {
  std::size_t representative = 0;     // smallest member
  std::vector<std::size_t> members;   // ids of 1-dimensional cones, ascending
};

/// Union-find closure of identification images (and parent embeddings) of
/// window rays. Classes are numbered by their smallest member, which is the
/// lexicographically smallest (cusp, coordinates). Throws UnsaturatedWindow
/// when an identification maps every ray of a window cone into the window
/// but the image cone is missing.
std::vector<RayClass> ray_classes(const FanSystem& fs);

/// class_of[ray cone id] for every 1-dimensional cone; npos elsewhere.
std::vector<std::size_t> ray_class_index(const FanSystem& fs, const std::vector<RayClass>& classes);

/// Orbit classes of cones under the cone pairings of all identifications
/// (or only those from `cusp` to itself when given). Each class lists cone
/// ids ascending; classes are ordered by their smallest member.
std::vector<std::vector<std::size_t>> cone_classes(const FanSystem& fs,
                                                   std::optional<std::size_t> cusp = std::nullopt);

void check_window_saturation(const FanSystem& fs);

/// Throws NonFreeAction if some groupoid element reachable inside the window
/// maps a cone onto itself while permuting its rays nontrivially.
void check_free_action(const FanSystem& fs);

// ---------------------------------------------------------------------------
// SNC condition and subdivisions

struct SncViolation {
  std::size_t cone;
  std::size_t ray_a;  // 1-cone ids, ray_a < ray_b
  std::size_t ray_b;
};

struct SncReport {
  bool ok = true;
  std::vector<SncViolation> violations;
};

/// ok iff no window cone has two distinct rays in the same ray class.
SncReport check_snc_condition(const FanSystem& fs);

/// Star subdivision of `cusp` at the ray through `point`; every cone
/// containing the carrier face of the point is replaced. Not equivariant.
FanSystem stellar_subdivide(const FanSystem& fs, std::size_t cusp, const IntVector& point);

/// Two-divides every 2-dimensional cone at the primitivized sum of its ray
/// generators (chosen on an orbit representative and propagated), and
/// inserts the induced walls in every higher cone.
FanSystem two_division_subdivide(const FanSystem& fs);

/// Equivariant toric resolution by star subdivisions at interior points of
/// fundamental parallelepipeds, chosen on orbit representatives.
FanSystem smooth_subdivide(const FanSystem& fs);

}  // namespace snc
