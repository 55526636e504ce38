#include "snc/mhs.hpp"

#include <algorithm>
#include <string>

#include "snc/error.hpp"

namespace snc {

void PureHS::add(int p, int q, std::size_t count) {
  if (p + q != weight)
    fail(ErrorCode::InvalidInput, "bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                                      ") does not have weight " + std::to_string(weight));
  if (count == 0) return;
  h[{p, q}] += count;
}

std::size_t PureHS::at(int p, int q) const {
  auto it = h.find({p, q});
  return it == h.end() ? 0 : it->second;
}

std::size_t PureHS::dim() const {
  std::size_t total = 0;
  for (const auto& [pq, d] : h) total += d;
  return total;
}

PureHS tate_twist(const PureHS& hs, int m) {
  PureHS out(hs.weight + 2 * m);
  for (const auto& [pq, d] : hs.h) out.h[{pq.first + m, pq.second + m}] = d;
  return out;
}

bool is_effective(const PureHS& hs) {
  return std::all_of(hs.h.begin(), hs.h.end(),
                     [](const auto& e) { return e.first.first >= 0 && e.first.second >= 0; });
}

std::size_t f_graded_dim(const PureHS& hs, int p) {
  std::size_t total = 0;
  for (const auto& [pq, d] : hs.h)
    if (pq.first >= p) total += d;
  return total;
}

std::size_t MixedHSTable::dim() const {
  std::size_t total = 0;
  for (const auto& [w, hs] : graded) total += hs.dim();
  return total;
}

std::size_t MixedHSTable::graded_dim(int weight) const {
  auto it = graded.find(weight);
  return it == graded.end() ? 0 : it->second.dim();
}

std::size_t MixedHSTable::hodge_number(int p, int q) const {
  auto it = graded.find(p + q);
  return it == graded.end() ? 0 : it->second.at(p, q);
}

bool MixedHSTable::weights_in_range(int n) const {
  const int hi = std::min(2 * degree, 2 * n);
  for (const auto& [w, hs] : graded)
    if (hs.dim() > 0 && (w < degree || w > hi)) return false;
  return true;
}

}  // namespace snc
