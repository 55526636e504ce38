#pragma once

// Geometric checks on fan systems, phrased through coordinates only.

#include <map>
#include <random>

#include "fan_generators.hpp"
#include "snc/fans.hpp"

namespace checks {

using namespace snc;

// Coefficients of p in the rays of c, or nullopt when p is outside span(c).
inline std::optional<RatVector> coefficients(const Cone& c, const IntVector& p) {
  return solve(to_rational(IntMatrix::from_columns(c.rays, p.size())), to_rational(p));
}

inline bool contains(const Cone& c, const IntVector& p) {
  auto l = coefficients(c, p);
  return l && std::all_of(l->begin(), l->end(), [](const Rational& x) { return x >= 0; });
}

inline bool in_interior(const Cone& c, const IntVector& p) {
  auto l = coefficients(c, p);
  return l && std::all_of(l->begin(), l->end(), [](const Rational& x) { return x > 0; });
}

// Every maximal output cone sits inside an input cone, and generic points of
// each maximal input cone lie in the interior of exactly one maximal output
// cone of the same cusp.
inline bool refines(const FanSystem& out, const FanSystem& in, std::mt19937& rng, int samples = 20) {
  for (auto id : out.maximal_cones()) {
    const Cone& c = out.cone(id);
    bool inside = false;
    for (auto jd : in.maximal_cones()) {
      const Cone& d = in.cone(jd);
      if (d.cusp != c.cusp) continue;
      if (std::all_of(c.rays.begin(), c.rays.end(), [&](const IntVector& r) { return contains(d, r); })) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  // Full-dimensional output cones: coordinates through a cached inverse.
  std::map<std::size_t, RatMatrix> inverses;
  auto signs = [&](const Cone& c, const IntVector& p) -> std::optional<RatVector> {
    if (c.dim() != p.size()) return coefficients(c, p);
    auto it = inverses.find(c.id);
    if (it == inverses.end())
      it = inverses.emplace(c.id, inverse(to_rational(IntMatrix::from_columns(c.rays, p.size())))).first;
    return it->second.apply(to_rational(p));
  };
  for (auto jd : in.maximal_cones()) {
    const Cone& d = in.cone(jd);
    for (int s = 0; s < samples; ++s) {
      IntVector p = gen::interior_point(rng, d);
      for (auto& x : p) x = x * 1009 + static_cast<int>(rng() % 801) - 400;  // generic perturbation
      if (!in_interior(d, p)) continue;
      int hits = 0;
      bool on_wall = false;
      for (auto id : out.maximal_cones()) {
        const Cone& c = out.cone(id);
        if (c.cusp != d.cusp || c.dim() != d.dim()) continue;
        const auto l = signs(c, p);
        if (!l || std::any_of(l->begin(), l->end(), [](const Rational& x) { return x < 0; })) continue;
        if (std::all_of(l->begin(), l->end(), [](const Rational& x) { return x > 0; }))
          ++hits;
        else
          on_wall = true;
      }
      if (on_wall) continue;  // not generic, resample
      if (hits != 1) return false;
    }
  }
  return true;
}

// Applying each identification to output cones that land in the window gives
// output cones again.
inline bool equivariant(const FanSystem& fs) {
  for (const auto& ident : fs.identifications())
    for (const auto& c : fs.cones()) {
      if (c.cusp != ident.source) continue;
      std::vector<IntVector> image;
      bool in_window = true;
      for (const auto& r : c.rays) {
        IntVector v = ident.matrix.apply(r);
        if (!fs.find_cone(ident.target, {v})) in_window = false;
        image.push_back(v);
      }
      if (in_window && !fs.find_cone(ident.target, image)) return false;
    }
  return true;
}

inline bool all_smooth(const FanSystem& fs) {
  for (const auto& c : fs.cones())
    if (c.dim() > 0 && c.dim() == c.rays.front().size() &&
        abs(determinant(IntMatrix::from_columns(c.rays, c.dim()))) != 1)
      return false;
  for (const auto& c : fs.cones())
    if (!is_smooth(c)) return false;
  return true;
}

}  // namespace checks
