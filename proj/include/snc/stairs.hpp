#pragma once

// Where the Hodge numbers h^{p,q}_k of the open quotient can be nonzero,
// given the corank sequence n(1) < ... < n(r).

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snc {

struct CorankData {
  std::string label;      // e.g. "sp:2"; empty for custom data
  int n = 0;              // complex dimension
  std::vector<int> n_seq; // n(1) < ... < n(r) <= n
  int c = 0;              // codimension of the Baily-Borel boundary
  bool q_simple = false;  // the group is Q-simple

  int r() const { return static_cast<int>(n_seq.size()); }
  int n_at(int i) const { return i == 0 ? 0 : n_seq.at(static_cast<std::size_t>(i - 1)); }
  bool tube_domain() const { return !n_seq.empty() && n_seq.back() == n; }
  /// n(i) - n(i-1) > 1.
  bool gap_condition(int i) const { return n_at(i) - n_at(i - 1) > 1; }

  /// Throws InvalidParams unless 0 < n(1) < ... < n(r) <= n and 0 < c <= n.
  void validate() const;
};

CorankData preset_sp(int g);
CorankData preset_o2n(int n);
CorankData preset_u(int p, int q);
/// "sp:G", "o2n:N" or "u:P,Q".
CorankData preset(std::string_view spec);

struct RuleCheck {
  std::string rule;  // triangle, purity, stairs, vacuum, roof
  bool passed = true;
  std::string detail;
};

struct Region {
  int k = 0;
  int n = 0;
  int bound = 0;  // min(k, n): the box [0, bound]^2
  std::set<std::pair<int, int>> admissible;
  std::map<std::pair<int, int>, std::vector<RuleCheck>> rule_trace;

  bool contains(int p, int q) const { return admissible.count({p, q}) > 0; }
};

Region admissible_region(const CorankData& cd, int k);

enum class RenderFormat { Ascii, Svg };
std::string render_region(const Region& rg, RenderFormat format);

}  // namespace snc
