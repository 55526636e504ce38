#pragma once

// Hodge structures as dimension tables: no underlying vector spaces.

#include <cstddef>
#include <map>
#include <utility>

namespace snc {

using Bidegree = std::pair<int, int>;

struct PureHS {
  int weight = 0;
  std::map<Bidegree, std::size_t> h;  // only nonzero entries are stored

  PureHS() = default;
  explicit PureHS(int w) : weight(w) {}

  /// Throws InvalidInput unless p + q == weight.
  void add(int p, int q, std::size_t count);
  std::size_t at(int p, int q) const;
  std::size_t dim() const;

  friend bool operator==(const PureHS& a, const PureHS& b) { return a.weight == b.weight && a.h == b.h; }
};

/// (-m)-th Tate twist: weight + 2m, (p,q) -> (p+m, q+m).
PureHS tate_twist(const PureHS& hs, int m);
bool is_effective(const PureHS& hs);
/// Σ_{p' >= p} h^{p', weight - p'}.
std::size_t f_graded_dim(const PureHS& hs, int p);

/// Weight-graded pieces of the mixed Hodge structure on H^degree.
struct MixedHSTable {
  int degree = 0;
  std::map<int, PureHS> graded;  // weight -> Gr^W_weight

  std::size_t dim() const;
  std::size_t graded_dim(int weight) const;
  std::size_t hodge_number(int p, int q) const;
  /// Every nonzero weight lies in [degree, min(2 degree, 2n)].
  bool weights_in_range(int n) const;
};

}  // namespace snc
