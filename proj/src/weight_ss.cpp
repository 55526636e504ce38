#include "snc/weight_ss.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "snc/delta_complex.hpp"

namespace snc {

namespace {

std::string bidegree_text(const Bidegree& b) {
  return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")";
}

// Position (1-based) in `index` of the single component missing from `face`.
std::size_t omitted_position(const std::vector<std::size_t>& index, const std::vector<std::size_t>& face) {
  for (std::size_t j = 0; j < index.size(); ++j)
    if (!std::binary_search(face.begin(), face.end(), index[j])) return j + 1;
  fail(ErrorCode::InvalidInput, "Gysin target is not a face of its source");
}

// Offset of each stratum's first basis vector inside a block.
std::map<std::size_t, std::size_t> block_offsets(const std::vector<BasisElement>& basis) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i].stratum, i);
  return out;
}

}  // namespace

std::size_t Stratum::hodge(int degree, int p, int q) const {
  auto it = cohomology.find(degree);
  return it == cohomology.end() ? 0 : it->second.at(p, q);
}

void StrataComplex::validate() {
  if (n < 0) fail(ErrorCode::InvalidInput, "negative ambient dimension");
  std::set<std::size_t> ids;
  for (const auto& s : strata) {
    if (!ids.insert(s.id).second) fail(ErrorCode::InvalidInput, "duplicate stratum id " + std::to_string(s.id));
    for (std::size_t i = 0; i < s.index.size(); ++i) {
      if (s.index[i] >= components.size())
        fail(ErrorCode::InvalidInput, "stratum " + std::to_string(s.id) + " names an unknown component");
      if (i > 0 && s.index[i - 1] >= s.index[i])
        fail(ErrorCode::InvalidInput, "stratum " + std::to_string(s.id) + " index set is not strictly increasing");
    }
    const int top = 2 * (n - static_cast<int>(s.codim()));
    for (const auto& [degree, hs] : s.cohomology) {
      if (degree < 0 || degree > top)
        fail(ErrorCode::InvalidInput, "stratum " + std::to_string(s.id) + " has cohomology in degree " +
                                          std::to_string(degree) + " outside [0, " + std::to_string(top) + "]");
      if (hs.weight != degree)
        fail(ErrorCode::InvalidInput, "stratum " + std::to_string(s.id) + " degree-" + std::to_string(degree) +
                                          " cohomology is not pure of weight " + std::to_string(degree));
      for (const auto& [pq, d] : hs.h)
        if (pq.first + pq.second != degree)
          fail(ErrorCode::InvalidInput, "bidegree " + bidegree_text(pq) + " in degree " + std::to_string(degree));
    }
  }
  std::sort(strata.begin(), strata.end(),
            [](const Stratum& a, const Stratum& b) { return std::make_pair(a.codim(), a.id) < std::make_pair(b.codim(), b.id); });

  std::set<std::tuple<std::size_t, std::size_t, int>> seen;
  for (const auto& g : gysin) {
    if (!ids.count(g.source) || !ids.count(g.target))
      fail(ErrorCode::InvalidInput, "Gysin map references an unknown stratum");
    if (!seen.emplace(g.source, g.target, g.degree).second)
      fail(ErrorCode::InvalidInput, "duplicate Gysin map " + std::to_string(g.source) + " -> " + std::to_string(g.target));
    const Stratum& s = stratum(g.source);
    const Stratum& t = stratum(g.target);
    if (t.codim() + 1 != s.codim() || !std::includes(s.index.begin(), s.index.end(), t.index.begin(), t.index.end()))
      fail(ErrorCode::InvalidInput, "Gysin target " + std::to_string(g.target) + " is not a codimension-1 face of " +
                                        std::to_string(g.source));
    std::set<Bidegree> block_seen;
    for (const auto& b : g.blocks) {
      if (b.bidegree.first + b.bidegree.second != g.degree)
        fail(ErrorCode::InvalidInput, "Gysin block bidegree " + bidegree_text(b.bidegree) + " is not in degree " +
                                          std::to_string(g.degree));
      if (!block_seen.insert(b.bidegree).second) fail(ErrorCode::InvalidInput, "duplicate Gysin block");
      const std::size_t rows = t.hodge(g.degree + 2, b.bidegree.first + 1, b.bidegree.second + 1);
      const std::size_t cols = s.hodge(g.degree, b.bidegree.first, b.bidegree.second);
      if (b.matrix.rows() != rows || b.matrix.cols() != cols)
        fail(ErrorCode::DimensionMismatch, "Gysin block " + std::to_string(g.source) + " -> " +
                                               std::to_string(g.target) + " at " + bidegree_text(b.bidegree) +
                                               " must be " + std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  std::sort(gysin.begin(), gysin.end(), [](const GysinMap& a, const GysinMap& b) {
    return std::tie(a.source, a.target, a.degree) < std::tie(b.source, b.target, b.degree);
  });
}

const Stratum& StrataComplex::stratum(std::size_t id) const {
  for (const auto& s : strata)
    if (s.id == id) return s;
  fail(ErrorCode::InvalidInput, "unknown stratum id " + std::to_string(id));
}

const GysinMap* StrataComplex::find_gysin(std::size_t source, std::size_t target, int degree) const {
  for (const auto& g : gysin)
    if (g.source == source && g.target == target && g.degree == degree) return &g;
  return nullptr;
}

std::size_t StrataComplex::max_codim() const {
  std::size_t m = 0;
  for (const auto& s : strata) m = std::max(m, s.codim());
  return m;
}

std::size_t PageEntry::dim() const {
  std::size_t total = 0;
  for (const auto& [b, basis] : blocks) total += basis.size();
  return total;
}

PureHS PageEntry::hodge() const {
  PureHS hs(degree + m);
  for (const auto& [b, basis] : blocks) hs.add(b.first, b.second, basis.size());
  return hs;
}

const PageEntry* SpectralPage::entry(int m, int degree) const {
  auto it = entries.find({m, degree});
  return it == entries.end() ? nullptr : &it->second;
}

const PageDifferential* SpectralPage::differential(int m, int degree) const {
  for (const auto& d : differentials)
    if (d.source == std::make_pair(m, degree)) return &d;
  return nullptr;
}

namespace {

SpectralPage page_between(const StrataComplex& sc, int k, int lo, int hi) {
  SpectralPage page;
  page.k = k;
  page.n = sc.n;
  const int top = static_cast<int>(sc.max_codim());
  for (int degree = lo; degree <= hi; ++degree)
    for (int m = 0; m <= top; ++m) {
      PageEntry e;
      e.m = m;
      e.degree = degree;
      for (const auto& s : sc.strata) {
        if (static_cast<int>(s.codim()) != m) continue;
        auto it = s.cohomology.find(degree - m);
        if (it == s.cohomology.end()) continue;
        for (const auto& [pq, d] : it->second.h) {
          auto& basis = e.blocks[{pq.first + m, pq.second + m}];
          for (std::size_t i = 0; i < d; ++i) basis.push_back({s.id, i});
        }
      }
      page.entries.emplace(std::make_pair(m, degree), std::move(e));
    }
  return page;
}

std::vector<PageDifferential> differentials_of(const StrataComplex& sc, const SpectralPage& page) {
  std::vector<PageDifferential> out;
  for (const auto& [key, src] : page.entries) {
    const auto [m, degree] = key;
    const PageEntry* dst = page.entry(m - 1, degree + 1);
    if (m == 0 || dst == nullptr) continue;
    PageDifferential diff;
    diff.source = key;
    for (const auto& [b, src_basis] : src.blocks) {
      static const std::vector<BasisElement> empty;
      auto dst_it = dst->blocks.find(b);
      const auto& dst_basis = dst_it == dst->blocks.end() ? empty : dst_it->second;
      RatMatrix block(dst_basis.size(), src_basis.size());
      const auto src_at = block_offsets(src_basis);
      const auto dst_at = block_offsets(dst_basis);
      const Bidegree pre{b.first - m, b.second - m};
      for (const auto& g : sc.gysin) {
        if (g.degree != degree - m || !src_at.count(g.source)) continue;
        const GysinBlock* gb = nullptr;
        for (const auto& candidate : g.blocks)
          if (candidate.bidegree == pre) gb = &candidate;
        if (gb == nullptr || gb->matrix.rows() == 0) continue;
        const std::size_t j = omitted_position(sc.stratum(g.source).index, sc.stratum(g.target).index);
        const Rational sign = (j % 2 == 1) ? -1 : 1;  // d1 = -(-1)^{j-1} ρ
        const std::size_t r0 = dst_at.at(g.target);
        const std::size_t c0 = src_at.at(g.source);
        for (std::size_t r = 0; r < gb->matrix.rows(); ++r)
          for (std::size_t c = 0; c < gb->matrix.cols(); ++c) block(r0 + r, c0 + c) += sign * gb->matrix(r, c);
      }
      diff.blocks.emplace(b, std::move(block));
    }
    out.push_back(std::move(diff));
  }
  return out;
}

void check_square_zero(const SpectralPage& page) {
  for (const auto& first : page.differentials) {
    const PageDifferential* second = page.differential(first.source.first - 1, first.source.second + 1);
    if (second == nullptr) continue;
    for (const auto& [b, a] : first.blocks) {
      auto it = second->blocks.find(b);
      if (it == second->blocks.end() || a.rows() == 0) continue;
      if (!(it->second * a).is_zero())
        fail(ErrorCode::NotAComplex, "d1∘d1 != 0 from column -" + std::to_string(first.source.first) +
                                         " in degree " + std::to_string(first.source.second) + " at bidegree " +
                                         bidegree_text(b));
    }
  }
}

}  // namespace

SpectralPage e1_page(const StrataComplex& sc, int k) { return page_between(sc, k, k - 1, k + 1); }

SpectralPage d1(const StrataComplex& sc, const SpectralPage& page) {
  // The composition is checked over every degree, not just the page shown.
  SpectralPage full = page_between(sc, page.k, -1, 2 * sc.n + 1);
  full.differentials = differentials_of(sc, full);
  check_square_zero(full);

  SpectralPage out = page;
  out.differentials = differentials_of(sc, page);
  return out;
}

MixedHSTable e2_page(const SpectralPage& page) {
  MixedHSTable table;
  table.degree = page.k;
  for (const auto& [key, e] : page.entries) {
    const auto [m, degree] = key;
    if (degree != page.k) continue;
    const PageDifferential* out = page.differential(m, degree);
    const PageDifferential* in = page.differential(m + 1, degree - 1);
    PureHS hs(page.k + m);
    for (const auto& [b, basis] : e.blocks) {
      std::size_t dim = basis.size();
      if (out) {
        auto it = out->blocks.find(b);
        if (it != out->blocks.end()) dim -= rank(it->second);
      }
      if (in) {
        auto it = in->blocks.find(b);
        if (it != in->blocks.end()) dim -= rank(it->second);
      }
      hs.add(b.first, b.second, dim);
    }
    if (hs.dim() > 0) table.graded[page.k + m] = std::move(hs);
  }
  return table;
}

MixedHSTable weight_graded_cohomology(const StrataComplex& sc, int k) { return e2_page(d1(sc, e1_page(sc, k))); }

FnFiltration weight_filtration_on_FnHn(const StrataComplex& sc) {
  const int n = sc.n;
  FnFiltration out;
  out.n = n;
  for (const auto& s : sc.strata)
    if (static_cast<int>(s.codim()) <= n && !s.cohomology.count(n - static_cast<int>(s.codim())))
      fail(ErrorCode::MissingInput, "stratum " + std::to_string(s.id) + " has no degree-" +
                                        std::to_string(n - static_cast<int>(s.codim())) + " (H^0(K)) data");

  const SpectralPage page = d1(sc, e1_page(sc, n));
  std::size_t running = 0;
  for (int m = 0; m <= n; ++m) {
    const PageEntry* e = page.entry(m, n);
    static const std::vector<BasisElement> empty;
    const std::vector<BasisElement>* basis = &empty;
    if (e) {
      auto it = e->blocks.find({n, m});
      if (it != e->blocks.end()) basis = &it->second;
    }
    RatMatrix kernel = RatMatrix::identity(basis->size());
    if (const PageDifferential* diff = page.differential(m, n)) {
      auto it = diff->blocks.find({n, m});
      if (it != diff->blocks.end()) kernel = rational_kernel_basis(it->second);
    }
    out.graded.push_back(kernel.cols());
    running += kernel.cols();
    out.cumulative.push_back(running);

    for (const auto& [stratum, start] : block_offsets(*basis)) {
      const std::size_t h = sc.stratum(stratum).hodge(n - m, n - m, 0);
      RatMatrix proj(h, kernel.cols());
      for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < kernel.cols(); ++c) proj(r, c) = kernel(start + r, c);
      out.residues.push_back({stratum, m, std::move(proj)});
    }
    out.kernel_basis.emplace(m, std::move(kernel));
  }
  return out;
}

StrataComplex annotate_from_fans(const FanSystem& fs, const CuspStrataAnnotation& annotation) {
  if (!check_snc_condition(fs).ok)
    fail(ErrorCode::SncConditionViolated, "the fan system does not satisfy the SNC condition");

  std::size_t max_rank = 0;
  for (const auto& c : fs.cusps()) max_rank = std::max(max_rank, c.lattice_rank);
  StrataComplex sc;
  sc.n = annotation.n.value_or(static_cast<int>(max_rank));

  struct Annotated {
    std::size_t cusp;
    std::size_t d;
    DeltaComplex dc;
  };
  std::vector<Annotated> cusps;
  std::set<std::size_t> used_classes;
  for (const auto& a : annotation.cusps) {
    auto idx = fs.cusp_index(a.cusp);
    if (!idx) fail(ErrorCode::InvalidInput, "annotation names unknown cusp '" + a.cusp + "'");
    if (static_cast<int>(fs.cusps()[*idx].lattice_rank) > sc.n)
      fail(ErrorCode::InvalidInput, "cusp '" + a.cusp + "' has rank above the ambient dimension");
    for (const auto& other : cusps)
      if (other.cusp == *idx) fail(ErrorCode::InvalidInput, "cusp '" + a.cusp + "' annotated twice");
    cusps.push_back({*idx, a.d, quotient_delta_complex(fs, *idx)});
    used_classes.insert(cusps.back().dc.vertex_classes.begin(), cusps.back().dc.vertex_classes.end());
  }
  std::sort(cusps.begin(), cusps.end(), [](const Annotated& a, const Annotated& b) { return a.cusp < b.cusp; });

  const std::vector<std::size_t> class_list(used_classes.begin(), used_classes.end());
  for (auto c : class_list) sc.components.push_back("R" + std::to_string(c));
  auto component = [&](std::size_t ray_class) {
    return static_cast<std::size_t>(std::lower_bound(class_list.begin(), class_list.end(), ray_class) -
                                    class_list.begin());
  };

  const int n = sc.n;
  Stratum ambient;
  ambient.id = 0;
  ambient.cohomology[n] = PureHS(n);
  sc.strata.push_back(std::move(ambient));

  // stratum_id[cusp position][simplex dim][simplex id]
  std::vector<std::vector<std::vector<std::size_t>>> stratum_id(cusps.size());
  for (std::size_t a = 0; a < cusps.size(); ++a) stratum_id[a].resize(cusps[a].dc.simplices.size());
  std::size_t next_id = 1;
  for (std::size_t m = 1; m <= max_rank; ++m)
    for (std::size_t a = 0; a < cusps.size(); ++a) {
      const auto& dc = cusps[a].dc;
      if (m > dc.simplices.size()) continue;
      const std::size_t rank_f = fs.cusps()[cusps[a].cusp].lattice_rank;
      const int mi = static_cast<int>(m);
      for (const auto& s : dc.simplices[m - 1]) {
        Stratum st;
        st.id = next_id++;
        for (auto v : s.vertices) st.index.push_back(component(v));
        st.cohomology[n - mi] = PureHS(n - mi);
        if (m == rank_f) st.cohomology[n - mi].add(n - mi, 0, cusps[a].d);
        // Rank-1 cusps have no codimension-1 layer: their facets are the ambient space.
        if (m + 1 == rank_f) {
          st.cohomology[n - mi + 1] = PureHS(n - mi + 1);
          st.cohomology[n - mi + 1].add(n - mi, 1, cusps[a].d);
        }
        stratum_id[a][m - 1].push_back(st.id);
        if (m == rank_f) sc.annotations.push_back({st.id, fs.cusps()[cusps[a].cusp].name, s.cone, cusps[a].d});
        sc.strata.push_back(std::move(st));
      }
    }

  for (std::size_t a = 0; a < cusps.size(); ++a) {
    const auto& dc = cusps[a].dc;
    const std::size_t rank_f = fs.cusps()[cusps[a].cusp].lattice_rank;
    const std::size_t d = cusps[a].d;
    if (rank_f < 2 || d == 0 || dc.simplices.size() < rank_f) continue;
    const int degree = n - static_cast<int>(rank_f);
    for (const auto& s : dc.simplices[rank_f - 1])
      for (auto f : s.faces)
        sc.gysin.push_back({stratum_id[a][rank_f - 1][s.id], stratum_id[a][rank_f - 2][f], degree,
                            {GysinBlock{{degree, 0}, RatMatrix::identity(d)}}});
  }
  sc.validate();
  return sc;
}

}  // namespace snc
