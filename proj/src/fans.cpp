#include "snc/fans.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace snc {

namespace {

using RaySet = std::vector<IntVector>;  // sorted, primitive

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // smaller index stays the root
  }

 private:
  std::vector<std::size_t> parent_;
};

RaySet sorted_rays(std::vector<IntVector> rays) {
  std::sort(rays.begin(), rays.end());
  return rays;
}

IntMatrix ray_matrix(const std::vector<IntVector>& rays, std::size_t rank) {
  return IntMatrix::from_columns(rays, rank);
}

std::string describe(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// All nonempty subsets of a sorted ray set; every subset stays sorted.
void add_with_faces(std::set<RaySet>& out, const RaySet& rays) {
  const std::size_t d = rays.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    RaySet face;
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (std::size_t{1} << i)) face.push_back(rays[i]);
    out.insert(std::move(face));
  }
}

Rational floor_of(const Rational& q) {
  const Integer& num = numerator(q);
  const Integer& den = denominator(q);
  Integer f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return Rational(f);
}

// Transforms carrying the representative (smallest id) of a cone class onto
// each member along the pairing graph.
struct ClassTransforms {
  std::size_t representative = 0;
  std::map<std::size_t, IntMatrix> transform;
};

struct PairingEdge {
  std::size_t to;
  IntMatrix matrix;
};

std::map<std::size_t, std::vector<PairingEdge>> pairing_graph(const FanSystem& fs) {
  std::map<std::size_t, std::vector<PairingEdge>> graph;
  for (const auto& ident : fs.identifications()) {
    const IntMatrix inv = unimodular_inverse(ident.matrix);
    for (const auto& p : ident.cone_pairing) {
      graph[p.source].push_back({p.target, ident.matrix});
      graph[p.target].push_back({p.source, inv});
    }
  }
  return graph;
}

ClassTransforms class_transforms(const FanSystem& fs, const std::vector<std::size_t>& members,
                                 const std::map<std::size_t, std::vector<PairingEdge>>& graph) {
  ClassTransforms ct;
  ct.representative = members.front();
  const Cone& rep = fs.cone(ct.representative);
  const std::size_t rank = fs.cusps()[rep.cusp].lattice_rank;
  ct.transform.emplace(ct.representative, IntMatrix::identity(rank));

  std::deque<std::size_t> queue{ct.representative};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    auto it = graph.find(u);
    if (it == graph.end()) continue;
    const IntMatrix tu = ct.transform.at(u);
    for (const auto& edge : it->second) {
      IntMatrix tv = edge.matrix * tu;
      auto found = ct.transform.find(edge.to);
      if (found == ct.transform.end()) {
        ct.transform.emplace(edge.to, std::move(tv));
        queue.push_back(edge.to);
        continue;
      }
      // Two groupoid paths reach the same cone: they must agree on every ray,
      // otherwise their quotient stabilizes the cone and permutes its rays.
      for (const auto& r : rep.rays)
        if (tv.apply(r) != found->second.apply(r))
          fail(ErrorCode::NonFreeAction,
               "cone " + std::to_string(edge.to) +
                   " is mapped onto itself with a nontrivial permutation of its rays");
    }
  }
  return ct;
}

std::map<std::size_t, std::set<RaySet>> cone_sets(const FanSystem& fs) {
  std::map<std::size_t, std::set<RaySet>> sets;
  for (std::size_t c = 0; c < fs.cusps().size(); ++c) sets[c];
  for (const auto& cone : fs.cones()) sets[cone.cusp].insert(cone.rays);
  return sets;
}

std::vector<ConeSpec> specs_from_sets(const FanSystem& fs,
                                      const std::map<std::size_t, std::set<RaySet>>& sets) {
  std::vector<ConeSpec> specs;
  for (const auto& [cusp, cones] : sets)
    for (const auto& rays : cones) specs.push_back({fs.cusps()[cusp].name, rays});
  return specs;
}

// Star subdivision of one cusp's cone set at `p`, which lies in the relative
// interior of the cone `carrier`.
void stellar_on_set(std::set<RaySet>& cones, const RaySet& carrier, const IntVector& p) {
  std::set<RaySet> out;
  for (const auto& sigma : cones) {
    if (!std::includes(sigma.begin(), sigma.end(), carrier.begin(), carrier.end())) {
      out.insert(sigma);
      continue;
    }
    for (const auto& r : carrier) {
      RaySet replaced;
      for (const auto& s : sigma)
        if (s != r) replaced.push_back(s);
      replaced.push_back(p);
      add_with_faces(out, sorted_rays(std::move(replaced)));
    }
  }
  // Faces of removed cones that do not contain the carrier are still faces of
  // surviving or new cones, so `out` is closed under faces.
  cones = std::move(out);
}

// Coefficients of p in the rays of `rays` if p lies in the relative interior.
std::optional<RatVector> interior_coefficients(const RaySet& rays, const IntVector& p, std::size_t rank) {
  const auto lambda = solve(to_rational(ray_matrix(rays, rank)), to_rational(p));
  if (!lambda) return std::nullopt;
  for (const auto& l : *lambda)
    if (l <= 0) return std::nullopt;
  return lambda;
}

}  // namespace

// ---------------------------------------------------------------------------
// FanSystem

FanSystem FanSystem::build(std::vector<CuspLabel> cusps, const std::vector<ConeSpec>& cones,
                           const std::vector<IdentificationSpec>& identifications) {
  FanSystem fs;
  std::map<std::string, std::size_t, std::less<>> by_name;
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    if (cusps[i].lattice_rank == 0) fail(ErrorCode::InvalidInput, "cusp '" + cusps[i].name + "' has rank 0");
    if (!by_name.emplace(cusps[i].name, i).second)
      fail(ErrorCode::InvalidInput, "duplicate cusp name '" + cusps[i].name + "'");
  }
  for (const auto& cusp : cusps) {
    for (const auto& emb : cusp.parent_embeddings) {
      auto it = by_name.find(emb.parent);
      if (it == by_name.end())
        fail(ErrorCode::InvalidInput, "embedding of '" + cusp.name + "' names unknown parent '" + emb.parent + "'");
      const std::size_t parent_rank = cusps[it->second].lattice_rank;
      if (emb.matrix.rows() != cusp.lattice_rank || emb.matrix.cols() != parent_rank)
        fail(ErrorCode::InvalidInput, "embedding matrix of '" + cusp.name + "' has the wrong shape");
      std::optional<IntMatrix> basis;
      try {
        basis = extend_to_lattice_basis(emb.matrix, cusp.lattice_rank);
      } catch (const Error&) {
        fail(ErrorCode::InvalidInput, "embedding of '" + emb.parent + "' into '" + cusp.name + "' is not injective");
      }
      if (!basis)
        fail(ErrorCode::InvalidInput,
             "embedding of '" + emb.parent + "' into '" + cusp.name + "' does not have saturated image");
    }
  }
  fs.cusps_ = std::move(cusps);

  std::set<std::pair<std::size_t, RaySet>> all;
  for (const auto& spec : cones) {
    auto it = by_name.find(spec.cusp);
    if (it == by_name.end()) fail(ErrorCode::InvalidInput, "cone names unknown cusp '" + spec.cusp + "'");
    const std::size_t cusp = it->second;
    const std::size_t rank = fs.cusps_[cusp].lattice_rank;
    if (spec.rays.empty()) continue;
    RaySet rays;
    for (const auto& r : spec.rays) {
      if (r.size() != rank)
        fail(ErrorCode::InvalidInput, "ray " + describe(r) + " does not live in the rank-" + std::to_string(rank) +
                                          " lattice of cusp '" + spec.cusp + "'");
      IntVector p = primitive(r);
      if (gcd(p) == 0) fail(ErrorCode::InvalidInput, "zero ray in cusp '" + spec.cusp + "'");
      rays.push_back(std::move(p));
    }
    rays = sorted_rays(std::move(rays));
    if (std::adjacent_find(rays.begin(), rays.end()) != rays.end())
      fail(ErrorCode::InvalidInput, "cone repeats a ray in cusp '" + spec.cusp + "'");
    if (rays.size() > rank || snc::rank(ray_matrix(rays, rank)) != rays.size())
      fail(ErrorCode::InvalidInput, "cone with rays linearly dependent (non-simplicial) in cusp '" + spec.cusp + "'");
    std::set<RaySet> closure;
    add_with_faces(closure, rays);
    for (auto& face : closure) all.emplace(cusp, face);
  }

  std::vector<std::pair<std::size_t, RaySet>> ordered(all.begin(), all.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
  });
  for (auto& [cusp, rays] : ordered) {
    const std::size_t id = fs.cones_.size();
    fs.index_.emplace(std::make_pair(cusp, rays), id);
    fs.cones_.push_back(Cone{cusp, std::move(rays), id});
  }

  for (const auto& spec : identifications) {
    auto src = by_name.find(spec.source);
    auto dst = by_name.find(spec.target);
    if (src == by_name.end() || dst == by_name.end())
      fail(ErrorCode::InvalidInput, "identification names an unknown cusp");
    const std::size_t rank = fs.cusps_[src->second].lattice_rank;
    if (fs.cusps_[dst->second].lattice_rank != rank || spec.matrix.rows() != rank || spec.matrix.cols() != rank)
      fail(ErrorCode::InvalidInput, "identification matrix must be square of the cusp lattice rank");
    if (abs(determinant(spec.matrix)) != 1)
      fail(ErrorCode::InvalidInput, "identification matrix is not unimodular");

    Identification ident{spec.matrix, src->second, dst->second, {}};
    for (const auto& cone : fs.cones_) {
      if (cone.cusp != ident.source) continue;
      RaySet image;
      for (const auto& r : cone.rays) image.push_back(ident.matrix.apply(r));
      if (auto target = fs.find_cone(ident.target, std::move(image)))
        ident.cone_pairing.push_back({cone.id, *target});
    }
    fs.identifications_.push_back(std::move(ident));
  }
  return fs;
}

std::optional<std::size_t> FanSystem::find_cone(std::size_t cusp, std::vector<IntVector> rays) const {
  auto it = index_.find(std::make_pair(cusp, sorted_rays(std::move(rays))));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FanSystem::cusp_index(std::string_view name) const {
  for (std::size_t i = 0; i < cusps_.size(); ++i)
    if (cusps_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> FanSystem::cones_of(std::size_t cusp, std::size_t dim) const {
  std::vector<std::size_t> out;
  for (const auto& c : cones_)
    if (c.cusp == cusp && c.dim() == dim) out.push_back(c.id);
  return out;
}

std::vector<std::size_t> FanSystem::maximal_cones() const {
  std::vector<std::size_t> out;
  for (const auto& c : cones_) {
    bool maximal = true;
    for (const auto& other : cones_) {
      if (other.cusp != c.cusp || other.dim() <= c.dim()) continue;
      if (std::includes(other.rays.begin(), other.rays.end(), c.rays.begin(), c.rays.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c.id);
  }
  return out;
}

std::vector<std::size_t> FanSystem::ray_ids(const Cone& c) const {
  std::vector<std::size_t> out;
  for (const auto& r : c.rays) {
    auto id = find_cone(c.cusp, {r});
    if (!id) fail(ErrorCode::InvalidInput, "ray " + describe(r) + " is not a window cone");
    out.push_back(*id);
  }
  return out;
}

std::size_t FanSystem::dimension() const {
  std::size_t d = 0;
  for (const auto& c : cones_) d = std::max(d, c.dim());
  return d;
}

std::vector<ConeSpec> FanSystem::cone_specs(bool maximal_only) const {
  std::vector<ConeSpec> out;
  if (maximal_only) {
    for (auto id : maximal_cones()) out.push_back({cusps_[cones_[id].cusp].name, cones_[id].rays});
  } else {
    for (const auto& c : cones_) out.push_back({cusps_[c.cusp].name, c.rays});
  }
  return out;
}

std::vector<IdentificationSpec> FanSystem::identification_specs() const {
  std::vector<IdentificationSpec> out;
  for (const auto& ident : identifications_)
    out.push_back({ident.matrix, cusps_[ident.source].name, cusps_[ident.target].name});
  return out;
}

FanSystem FanSystem::with_cones(const std::vector<ConeSpec>& cones) const {
  FanSystem out = build(cusps_, cones, identification_specs());
  out.projectivity_unchecked_ = projectivity_unchecked_;
  return out;
}

bool operator==(const FanSystem& a, const FanSystem& b) {
  if (a.cusps_.size() != b.cusps_.size() || a.cones_.size() != b.cones_.size() ||
      a.identifications_.size() != b.identifications_.size() ||
      a.projectivity_unchecked_ != b.projectivity_unchecked_)
    return false;
  for (std::size_t i = 0; i < a.cusps_.size(); ++i) {
    const auto& x = a.cusps_[i];
    const auto& y = b.cusps_[i];
    if (x.name != y.name || x.lattice_rank != y.lattice_rank ||
        x.parent_embeddings.size() != y.parent_embeddings.size())
      return false;
    for (std::size_t j = 0; j < x.parent_embeddings.size(); ++j)
      if (x.parent_embeddings[j].parent != y.parent_embeddings[j].parent ||
          x.parent_embeddings[j].matrix != y.parent_embeddings[j].matrix)
        return false;
  }
  for (std::size_t i = 0; i < a.cones_.size(); ++i)
    if (a.cones_[i].cusp != b.cones_[i].cusp || a.cones_[i].rays != b.cones_[i].rays) return false;
  for (std::size_t i = 0; i < a.identifications_.size(); ++i) {
    const auto& x = a.identifications_[i];
    const auto& y = b.identifications_[i];
    if (x.matrix != y.matrix || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cone-level operations

std::vector<Cone> faces(const Cone& c, std::size_t dim) {
  if (dim > c.dim()) fail(ErrorCode::InvalidInput, "face dimension exceeds the cone dimension");
  std::vector<Cone> out;
  std::vector<bool> pick(c.dim(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(dim), true);
  do {
    Cone face{c.cusp, {}, Cone::npos};
    for (std::size_t i = 0; i < c.dim(); ++i)
      if (pick[i]) face.rays.push_back(c.rays[i]);
    out.push_back(std::move(face));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Integer multiplicity(const Cone& c) {
  if (c.rays.empty()) return Integer(1);
  return lattice_index(ray_matrix(c.rays, c.rays.front().size()));
}

bool is_smooth(const Cone& c) {
  if (c.rays.empty()) return true;
  const std::size_t n = c.rays.front().size();
  return extend_to_lattice_basis(ray_matrix(c.rays, n), n).has_value();
}

std::vector<ParallelepipedPoint> parallelepiped_points(const Cone& c) {
  std::vector<ParallelepipedPoint> out;
  if (c.rays.empty()) return out;
  const std::size_t n = c.rays.front().size();
  const std::size_t d = c.dim();
  const IntMatrix r = ray_matrix(c.rays, n);
  const SmithForm f = smith_normal_form(r);
  if (f.rank() != d) fail(ErrorCode::DependentInput, "cone rays are linearly dependent");

  // r = B T with T = D V^{-1}; cosets of ℤ^d / Tℤ^d are represented by the
  // boxes 0 <= y_i < d_i, and λ = T^{-1} y = V D^{-1} y.
  std::vector<Integer> factor(d);
  for (std::size_t i = 0; i < d; ++i) factor[i] = f.d(i, i);
  std::vector<Integer> y(d, 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < d) {
      y[pos] += 1;
      if (y[pos] < factor[pos]) break;
      y[pos] = 0;
      ++pos;
    }
    if (pos == d) break;

    RatVector lambda(d);
    for (std::size_t j = 0; j < d; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < d; ++i) s += Rational(f.v(j, i)) * Rational(y[i], factor[i]);
      lambda[j] = s - floor_of(s);
    }
    RatVector point(n);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < n; ++i) point[i] += lambda[j] * Rational(c.rays[j][i]);
    IntVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = numerator(point[i]);
    out.push_back({std::move(p), std::move(lambda)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Groupoid closure

void check_window_saturation(const FanSystem& fs) {
  auto check_image = [&](const Cone& cone, std::size_t target, const IntMatrix& m, const std::string& what) {
    if (cone.dim() < 2) return;
    RaySet image;
    for (const auto& r : cone.rays) {
      IntVector v = primitive(m.apply(r));
      if (!fs.find_cone(target, {v})) return;  // not defined on this cone
      image.push_back(std::move(v));
    }
    if (!fs.find_cone(target, image))
      fail(ErrorCode::UnsaturatedWindow,
           what + " maps every ray of cone " + std::to_string(cone.id) +
               " into the window but the image cone is not a window cone");
  };
  for (std::size_t k = 0; k < fs.identifications().size(); ++k) {
    const auto& ident = fs.identifications()[k];
    for (const auto& cone : fs.cones())
      if (cone.cusp == ident.source) check_image(cone, ident.target, ident.matrix, "identification " + std::to_string(k));
  }
  for (std::size_t f = 0; f < fs.cusps().size(); ++f)
    for (const auto& emb : fs.cusps()[f].parent_embeddings) {
      const std::size_t parent = *fs.cusp_index(emb.parent);
      for (const auto& cone : fs.cones())
        if (cone.cusp == parent) check_image(cone, f, emb.matrix, "embedding of '" + emb.parent + "'");
    }
}

std::vector<RayClass> ray_classes(const FanSystem& fs) {
  check_window_saturation(fs);
  UnionFind uf(fs.cones().size());
  for (const auto& ident : fs.identifications())
    for (const auto& p : ident.cone_pairing)
      if (fs.cone(p.source).dim() == 1) uf.unite(p.source, p.target);
  for (std::size_t f = 0; f < fs.cusps().size(); ++f)
    for (const auto& emb : fs.cusps()[f].parent_embeddings) {
      const std::size_t parent = *fs.cusp_index(emb.parent);
      for (auto id : fs.cones_of(parent, 1)) {
        IntVector image = primitive(emb.matrix.apply(fs.cone(id).rays.front()));
        if (auto target = fs.find_cone(f, {image})) uf.unite(id, *target);
      }
    }

  std::map<std::size_t, RayClass> by_root;
  for (const auto& cone : fs.cones()) {
    if (cone.dim() != 1) continue;
    by_root[uf.find(cone.id)].members.push_back(cone.id);
  }
  std::vector<RayClass> classes;
  for (auto& [root, cls] : by_root) {
    cls.representative = cls.members.front();
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const RayClass& a, const RayClass& b) { return a.representative < b.representative; });
  return classes;
}

std::vector<std::size_t> ray_class_index(const FanSystem& fs, const std::vector<RayClass>& classes) {
  std::vector<std::size_t> out(fs.cones().size(), Cone::npos);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (auto m : classes[k].members) out[m] = k;
  return out;
}

std::vector<std::vector<std::size_t>> cone_classes(const FanSystem& fs, std::optional<std::size_t> cusp) {
  UnionFind uf(fs.cones().size());
  for (const auto& ident : fs.identifications()) {
    if (cusp && (ident.source != *cusp || ident.target != *cusp)) continue;
    for (const auto& p : ident.cone_pairing) uf.unite(p.source, p.target);
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (const auto& cone : fs.cones()) {
    if (cusp && cone.cusp != *cusp) continue;
    by_root[uf.find(cone.id)].push_back(cone.id);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

void check_free_action(const FanSystem& fs) {
  const auto graph = pairing_graph(fs);
  for (const auto& members : cone_classes(fs)) class_transforms(fs, members, graph);
}

// ---------------------------------------------------------------------------
// SNC condition and subdivisions

SncReport check_snc_condition(const FanSystem& fs) {
  const auto classes = ray_classes(fs);
  const auto class_of = ray_class_index(fs, classes);
  SncReport report;
  for (const auto& cone : fs.cones()) {
    if (cone.dim() < 2) continue;
    const auto rays = fs.ray_ids(cone);
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t j = i + 1; j < rays.size(); ++j)
        if (class_of[rays[i]] == class_of[rays[j]])
          report.violations.push_back({cone.id, std::min(rays[i], rays[j]), std::max(rays[i], rays[j])});
  }
  report.ok = report.violations.empty();
  return report;
}

FanSystem stellar_subdivide(const FanSystem& fs, std::size_t cusp, const IntVector& point) {
  if (cusp >= fs.cusps().size()) fail(ErrorCode::InvalidInput, "unknown cusp index");
  const std::size_t rank = fs.cusps()[cusp].lattice_rank;
  if (point.size() != rank) fail(ErrorCode::InvalidInput, "point has the wrong lattice rank");
  const IntVector p = primitive(point);
  if (gcd(p) == 0) fail(ErrorCode::InvalidInput, "cannot subdivide at the origin");

  for (const auto& cone : fs.cones()) {
    if (cone.cusp != cusp || !interior_coefficients(cone.rays, p, rank)) continue;
    if (cone.dim() == 1) return fs;
    auto sets = cone_sets(fs);
    stellar_on_set(sets[cusp], cone.rays, p);
    FanSystem out = fs.with_cones(specs_from_sets(fs, sets));
    out.mark_projectivity_unchecked();
    return out;
  }
  fail(ErrorCode::InvalidInput, "point " + describe(point) + " is not in the support of the window");
}

FanSystem two_division_subdivide(const FanSystem& fs) {
  check_window_saturation(fs);
  const auto graph = pairing_graph(fs);

  bool any_two_cone = false;
  std::map<std::size_t, IntVector> division;  // 2-cone id -> new ray
  for (const auto& members : cone_classes(fs)) {
    const ClassTransforms ct = class_transforms(fs, members, graph);
    const Cone& rep = fs.cone(ct.representative);
    if (rep.dim() != 2) continue;
    any_two_cone = true;
    IntVector sum(rep.rays.front().size());
    for (const auto& r : rep.rays)
      for (std::size_t i = 0; i < r.size(); ++i) sum[i] += r[i];
    const IntVector w = primitive(std::move(sum));
    for (auto id : members) division.emplace(id, primitive(ct.transform.at(id).apply(w)));
  }
  // Freeness over the rest of the window (classes of other dimensions).
  check_free_action(fs);
  if (!any_two_cone) return fs;

  // With the walls through every two-division in place, a cone with rays
  // r_1..r_d is cut into the chambers x_{π1} >= ... >= x_{πd} of the braid
  // arrangement, generated by the partial sums r_{π1}, r_{π1}+r_{π2}, ...
  std::map<std::size_t, std::set<RaySet>> sets;
  for (std::size_t c = 0; c < fs.cusps().size(); ++c) sets[c];
  for (const auto& cone : fs.cones()) {
    std::vector<std::size_t> perm(cone.dim());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      RaySet chamber;
      IntVector partial(cone.rays.front().size());
      for (auto k : perm) {
        for (std::size_t i = 0; i < partial.size(); ++i) partial[i] += cone.rays[k][i];
        chamber.push_back(primitive(partial));
      }
      if (cone.dim() == 2 && chamber.back() != division.at(cone.id))
        fail(ErrorCode::NonFreeAction, "propagated two-division ray disagrees on cone " + std::to_string(cone.id));
      add_with_faces(sets[cone.cusp], sorted_rays(std::move(chamber)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  FanSystem out = fs.with_cones(specs_from_sets(fs, sets));
  out.mark_projectivity_unchecked();
  return out;
}

FanSystem smooth_subdivide(const FanSystem& fs) {
  check_window_saturation(fs);
  check_free_action(fs);

  FanSystem current = fs;
  constexpr std::size_t kMaxRounds = 10000;
  for (std::size_t round = 0;; ++round) {
    if (round == kMaxRounds) fail(ErrorCode::InvalidInput, "smooth_subdivide did not terminate");

    // A non-smooth cone of minimal dimension has only smooth proper faces, so
    // every nonzero parallelepiped point lies in its interior.
    std::optional<std::size_t> target;
    for (const auto& cone : current.cones()) {
      if (is_smooth(cone)) continue;
      if (!target || cone.dim() < current.cone(*target).dim()) target = cone.id;
    }
    if (!target) break;

    const auto graph = pairing_graph(current);
    std::vector<std::size_t> members;
    for (auto& cls : cone_classes(current))
      if (std::find(cls.begin(), cls.end(), *target) != cls.end()) members = cls;
    const ClassTransforms ct = class_transforms(current, members, graph);
    const Cone& rep = current.cone(ct.representative);

    auto points = parallelepiped_points(rep);
    auto interior_end = std::remove_if(points.begin(), points.end(), [](const ParallelepipedPoint& pt) {
      return std::any_of(pt.coefficients.begin(), pt.coefficients.end(), [](const Rational& l) { return l == 0; });
    });
    points.erase(interior_end, points.end());
    if (points.empty()) fail(ErrorCode::InvalidInput, "no interior parallelepiped point in a minimal singular cone");
    const auto best = std::min_element(points.begin(), points.end(), [](const auto& a, const auto& b) {
      const Rational sa = std::accumulate(a.coefficients.begin(), a.coefficients.end(), Rational(0));
      const Rational sb = std::accumulate(b.coefficients.begin(), b.coefficients.end(), Rational(0));
      if (sa != sb) return sa < sb;
      if (a.coefficients != b.coefficients) return a.coefficients < b.coefficients;
      return a.point < b.point;
    });

    auto sets = cone_sets(current);
    for (auto id : members) {
      const Cone& c = current.cone(id);
      stellar_on_set(sets[c.cusp], c.rays, ct.transform.at(id).apply(best->point));
    }
    current = current.with_cones(specs_from_sets(current, sets));
    current.mark_projectivity_unchecked();
  }
  return current;
}

}  // namespace snc
