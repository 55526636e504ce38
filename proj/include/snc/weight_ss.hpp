#pragma once

// Weight spectral sequence of a smooth compactification with simple normal
// crossing boundary, over formal Hodge data and user-supplied Gysin maps.
//
// E1^{-m, k+m} = ⊕_{|I| = m} H^{k-m}(D_I)(-m). Bidegrees inside a page are
// post-twist; Gysin blocks are keyed by the pre-twist source bidegree.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snc/exact_linalg.hpp"
#include "snc/fans.hpp"
#include "snc/mhs.hpp"

namespace snc {

struct Stratum {
  std::size_t id = 0;
  std::vector<std::size_t> index;    // sorted component positions; empty for the ambient space
  std::map<int, PureHS> cohomology;  // degree -> Hodge numbers (weight = degree)

  std::size_t codim() const { return index.size(); }
  std::size_t hodge(int degree, int p, int q) const;
};

struct GysinBlock {
  Bidegree bidegree;  // (p, q) in the source; the target bidegree is (p+1, q+1)
  RatMatrix matrix;   // h^{p+1,q+1}(target) x h^{p,q}(source)
};

struct GysinMap {
  std::size_t source = 0;  // stratum id, |I| = m
  std::size_t target = 0;  // stratum id, |I'| = m - 1, I' ⊂ I
  int degree = 0;          // source cohomology degree
  std::vector<GysinBlock> blocks;
};

/// Top stratum produced from a cone of a cusp with formal dimension d.
struct StratumAnnotation {
  std::size_t stratum = 0;
  std::string cusp;
  std::size_t cone = 0;
  std::size_t d = 0;
};

struct StrataComplex {
  int n = 0;
  std::vector<std::string> components;
  std::vector<Stratum> strata;  // sorted by (|I|, id)
  std::vector<GysinMap> gysin;
  std::vector<StratumAnnotation> annotations;

  /// Sorts strata and checks every shape, degree and face relation.
  void validate();
  const Stratum& stratum(std::size_t id) const;
  const GysinMap* find_gysin(std::size_t source, std::size_t target, int degree) const;
  std::size_t max_codim() const;
};

struct BasisElement {
  std::size_t stratum;
  std::size_t offset;  // within h^{p,q} of that stratum
};

struct PageEntry {
  int m = 0;       // column -m
  int degree = 0;  // total degree of the entry
  std::map<Bidegree, std::vector<BasisElement>> blocks;  // post-twist bidegree -> basis

  std::size_t dim() const;
  PureHS hodge() const;  // weight degree + m
};

struct PageDifferential {
  std::pair<int, int> source;                // (m, degree) of the source entry
  std::map<Bidegree, RatMatrix> blocks;      // target basis x source basis
};

struct SpectralPage {
  int k = 0;
  int n = 0;
  std::map<std::pair<int, int>, PageEntry> entries;  // (m, degree) -> entry at (-m, degree + m)
  std::vector<PageDifferential> differentials;

  const PageEntry* entry(int m, int degree) const;
  const PageDifferential* differential(int m, int degree) const;
};

/// Entries of total degree k-1, k and k+1, so that the E2 terms of degree k
/// can be read off once d1 is attached.
SpectralPage e1_page(const StrataComplex& sc, int k);

/// Attaches d1 with -d1 = ⊕_j (-1)^{j-1} ρ^I_j; throws NotAComplex when d1∘d1 != 0.
SpectralPage d1(const StrataComplex& sc, const SpectralPage& page);

/// Gr^W of H^k, entry by entry and Hodge bidegree by bidegree.
MixedHSTable e2_page(const SpectralPage& page);

MixedHSTable weight_graded_cohomology(const StrataComplex& sc, int k);

struct ResidueProjection {
  std::size_t stratum = 0;
  int m = 0;
  RatMatrix matrix;  // h^{n-m,0}(stratum) x dim Gr^W_{n+m}F^n
};

struct FnFiltration {
  int n = 0;
  std::vector<std::size_t> graded;      // graded[m] = dim Gr^W_{n+m} F^n H^n
  std::vector<std::size_t> cumulative;  // cumulative[m] = dim W_{n+m} F^n H^n
  std::map<int, RatMatrix> kernel_basis;
  std::vector<ResidueProjection> residues;
};

/// Gr^W_{n+m}F^n = ker(H^0(K_{D(m)}) -> H^{n-m+1,1}(D(m-1))). Throws
/// MissingInput when a stratum lacks its degree n-m cohomology.
FnFiltration weight_filtration_on_FnHn(const StrataComplex& sc);

struct CuspDimension {
  std::string cusp;
  std::size_t d = 0;
};

struct CuspStrataAnnotation {
  std::optional<int> n;  // defaults to the largest cusp lattice rank
  std::vector<CuspDimension> cusps;
};

/// Synthetic strata complex of the annotated cusps: one stratum per orbit
/// class of cones plus the ambient space, with only the H^0(K) layer of the
/// top strata and the H^{n-m+1,1} layer of the codimension-1 strata populated
/// and identity Gysin blocks, so that -d1 is ∂ ⊗ id_d.
StrataComplex annotate_from_fans(const FanSystem& fs, const CuspStrataAnnotation& annotation);

}  // namespace snc
