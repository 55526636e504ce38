#include "snc/delta_complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace snc {

std::optional<std::size_t> DeltaComplex::vertex_of_class(std::size_t ray_class) const {
  auto it = std::lower_bound(vertex_classes.begin(), vertex_classes.end(), ray_class);
  if (it == vertex_classes.end() || *it != ray_class) return std::nullopt;
  return static_cast<std::size_t>(it - vertex_classes.begin());
}

DeltaComplex quotient_delta_complex(const FanSystem& fs, std::size_t cusp, QuotientOptions options) {
  if (cusp >= fs.cusps().size()) fail(ErrorCode::InvalidInput, "unknown cusp index");
  const auto classes = ray_classes(fs);
  const auto class_of = ray_class_index(fs, classes);

  DeltaComplex dc;
  for (auto id : fs.cones_of(cusp, 1)) dc.vertex_classes.push_back(class_of[id]);
  std::sort(dc.vertex_classes.begin(), dc.vertex_classes.end());
  dc.vertex_classes.erase(std::unique(dc.vertex_classes.begin(), dc.vertex_classes.end()), dc.vertex_classes.end());
  if (dc.vertex_classes.empty()) return dc;

  std::size_t top = 0;
  for (const auto& cone : fs.cones())
    if (cone.cusp == cusp) top = std::max(top, cone.dim());
  dc.dim = static_cast<int>(top) - 1;
  dc.simplices.resize(top);

  for (std::size_t v = 0; v < dc.vertex_classes.size(); ++v) {
    Simplex s;
    s.id = v;
    s.vertices = {dc.vertex_classes[v]};
    for (auto id : fs.cones_of(cusp, 1))
      if (class_of[id] == dc.vertex_classes[v]) {
        s.cone = id;
        break;
      }
    dc.simplices[0].push_back(std::move(s));
  }

  // Simplex of every cone of the cusp, for dimensions >= 1.
  std::map<std::size_t, std::size_t> simplex_of;
  for (auto id : fs.cones_of(cusp, 1)) simplex_of[id] = *dc.vertex_of_class(class_of[id]);

  // Vertices of a cone paired with its rays, sorted by class.
  auto labelled_rays = [&](const Cone& c) {
    std::vector<std::pair<std::size_t, IntVector>> out;
    const auto ids = fs.ray_ids(c);
    for (std::size_t i = 0; i < ids.size(); ++i) out.emplace_back(class_of[ids[i]], c.rays[i]);
    std::sort(out.begin(), out.end());
    return out;
  };

  const auto orbit_classes = cone_classes(fs, cusp);
  for (std::size_t d = 1; d < top; ++d) {
    for (const auto& members : orbit_classes) {
      const Cone& rep = fs.cone(members.front());
      if (rep.dim() != d + 1) continue;
      const auto labelled = labelled_rays(rep);
      Simplex s;
      s.id = dc.simplices[d].size();
      s.cone = rep.id;
      for (const auto& [cls, ray] : labelled) s.vertices.push_back(cls);
      if (!options.allow_repeated_vertices &&
          std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
        fail(ErrorCode::SncConditionViolated,
             "cone " + std::to_string(rep.id) + " has two equivalent rays; its simplex would repeat a vertex");
      for (std::size_t j = 0; j < labelled.size(); ++j) {
        std::vector<IntVector> face;
        for (std::size_t i = 0; i < labelled.size(); ++i)
          if (i != j) face.push_back(labelled[i].second);
        s.faces.push_back(simplex_of.at(*fs.find_cone(cusp, std::move(face))));
      }
      for (auto m : members) simplex_of[m] = s.id;
      dc.simplices[d].push_back(std::move(s));
    }
  }
  return dc;
}

std::size_t ChainComplexQ::rank_of(int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= boundary.size()) return 0;
  return boundary[static_cast<std::size_t>(d)].cols();
}

ChainComplexQ boundary_matrices(const DeltaComplex& dc) {
  ChainComplexQ cc;
  if (dc.dim < 0) return cc;
  cc.boundary.emplace_back(0, dc.count(0));
  for (int d = 1; d <= dc.dim; ++d) {
    RatMatrix b(dc.count(d - 1), dc.count(d));
    for (const auto& s : dc.simplices[static_cast<std::size_t>(d)])
      for (std::size_t j = 0; j < s.faces.size(); ++j) b(s.faces[j], s.id) += (j % 2 == 0) ? 1 : -1;
    cc.boundary.push_back(std::move(b));
  }
  return cc;
}

std::vector<std::size_t> homology_dims(const ChainComplexQ& cc) {
  const std::size_t top = cc.boundary.size();
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t d = 0; d < top; ++d) ranks[d] = rank(cc.boundary[d]);
  for (std::size_t d = 2; d < top; ++d)
    if (!(cc.boundary[d - 1] * cc.boundary[d]).is_zero())
      fail(ErrorCode::NotAComplex, "boundary composition in degree " + std::to_string(d) + " is nonzero");
  std::vector<std::size_t> betti(top);
  for (std::size_t d = 0; d < top; ++d) betti[d] = cc.boundary[d].cols() - ranks[d] - ranks[d + 1];
  return betti;
}

std::vector<IntegralHomologyGroup> integral_homology(const DeltaComplex& dc) {
  const ChainComplexQ cc = boundary_matrices(dc);
  const auto betti = homology_dims(cc);
  std::vector<IntegralHomologyGroup> out(betti.size());
  for (std::size_t d = 0; d < betti.size(); ++d) {
    out[d].betti = betti[d];
    if (d + 1 >= cc.boundary.size()) continue;
    const RatMatrix& q = cc.boundary[d + 1];
    IntMatrix b(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t j = 0; j < q.cols(); ++j) b(i, j) = numerator(q(i, j));
    for (const auto& f : smith_normal_form(b).invariant_factors())
      if (f > 1) out[d].torsion.push_back(f);
  }
  return out;
}

PseudomanifoldReport pseudomanifold_report(const DeltaComplex& dc) {
  PseudomanifoldReport report;
  if (dc.dim < 0) return report;
  const auto top = static_cast<std::size_t>(dc.dim);

  // Equidimensional: everything is reached from the top simplices.
  std::vector<std::vector<bool>> reached(top + 1);
  for (std::size_t d = 0; d <= top; ++d) reached[d].assign(dc.simplices[d].size(), d == top);
  for (std::size_t d = top; d >= 1; --d)
    for (const auto& s : dc.simplices[d])
      if (reached[d][s.id])
        for (auto f : s.faces) reached[d - 1][f] = true;
  for (std::size_t d = 0; d <= top; ++d)
    for (std::size_t i = 0; i < reached[d].size(); ++i)
      if (!reached[d][i])
        fail(ErrorCode::NotEquidimensional,
             std::to_string(d) + "-simplex " + std::to_string(i) + " is not a face of a top simplex");

  report.betti = homology_dims(boundary_matrices(dc));
  const auto& tops = dc.simplices[top];
  if (top == 0) {
    report.closed = report.oriented = true;
    report.fundamental_class = std::vector<int>(tops.size(), 1);
    return report;
  }

  struct Incidence {
    std::size_t simplex;
    int sign;
  };
  std::vector<std::vector<Incidence>> cofaces(dc.simplices[top - 1].size());
  for (const auto& s : tops)
    for (std::size_t j = 0; j < s.faces.size(); ++j) cofaces[s.faces[j]].push_back({s.id, j % 2 == 0 ? 1 : -1});
  report.closed = std::all_of(cofaces.begin(), cofaces.end(), [](const auto& c) { return c.size() == 2; });

  // Orientation: ε_a s_a + ε_b s_b = 0 across every shared codimension-1 face.
  std::vector<std::vector<std::pair<std::size_t, int>>> links(tops.size());
  bool consistent = true;
  for (const auto& c : cofaces) {
    if (c.size() != 2) continue;
    if (c[0].simplex == c[1].simplex) {
      if (c[0].sign + c[1].sign != 0) consistent = false;
      continue;
    }
    const int relation = -c[0].sign * c[1].sign;  // ε_b = relation · ε_a
    links[c[0].simplex].emplace_back(c[1].simplex, relation);
    links[c[1].simplex].emplace_back(c[0].simplex, relation);
  }
  std::vector<int> eps(tops.size(), 0);
  for (std::size_t start = 0; start < tops.size() && consistent; ++start) {
    if (eps[start] != 0) continue;
    eps[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && consistent) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (const auto& [b, relation] : links[a]) {
        const int want = relation * eps[a];
        if (eps[b] == 0) {
          eps[b] = want;
          queue.push_back(b);
        } else if (eps[b] != want) {
          consistent = false;
          break;
        }
      }
    }
  }
  report.oriented = consistent;
  if (report.closed && report.oriented) report.fundamental_class = eps;
  return report;
}

SimplicialCollapse simplicial_collapse(const DeltaComplex& dc) {
  SimplicialCollapse out;
  if (dc.dim < 0) return out;
  const auto top = static_cast<std::size_t>(dc.dim);
  out.simplices.resize(top + 1);
  out.map.resize(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    std::map<std::vector<std::size_t>, std::size_t> seen;
    for (const auto& s : dc.simplices[d]) {
      std::vector<std::size_t> key = s.vertices;
      key.erase(std::unique(key.begin(), key.end()), key.end());
      auto [it, inserted] = seen.emplace(key, out.simplices[d].size());
      if (inserted) out.simplices[d].push_back(key);
      out.map[d].push_back(it->second);
    }
  }
  return out;
}

}  // namespace snc
