#include "snc/json_io.hpp"

#include <algorithm>
#include <limits>

#include "snc/error.hpp"

namespace snc {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception&) {
    bad(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get<T>(j, key);
}

std::size_t get_count(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::optional<std::size_t> get_optional_count(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get_count(j, key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) bad(std::string("field \"") + key + "\" must be an array");
  return v;
}

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      bad("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  bad("expected an integer, got " + j.dump());
}

Json rational_json(const Rational& q) {
  if (denominator(q) == 1) return integer_json(numerator(q));
  return to_string(q);
}

Rational rational_from(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      bad("not a rational: " + j.dump());
    }
  }
  return Rational(integer_from(j));
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

IntVector vector_from(const Json& j) {
  if (!j.is_array()) bad("expected an integer array, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from(x));
  return v;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

IntMatrix int_matrix_from(const Json& j, std::size_t cols_if_empty = 0) {
  if (!j.is_array()) bad("expected a matrix (array of rows)");
  if (j.empty()) return IntMatrix(0, cols_if_empty);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    IntVector row = vector_from(j[i]);
    if (row.size() != cols) bad("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

Json rat_matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

RatMatrix rat_matrix_from(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("matrix row count does not match \"rows\"");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("matrix column count does not match \"cols\"");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from(j[i][c]);
  }
  return m;
}

std::string bidegree_key(const Bidegree& pq) { return std::to_string(pq.first) + "," + std::to_string(pq.second); }

Bidegree bidegree_from_key(const std::string& key) {
  const auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    std::size_t used_p = 0, used_q = 0;
    const int p = std::stoi(key.substr(0, comma), &used_p);
    const int q = std::stoi(key.substr(comma + 1), &used_q);
    if (used_p != comma || used_q != key.size() - comma - 1) throw std::invalid_argument(key);
    return {p, q};
  } catch (const std::exception&) {
    bad("bidegree key must look like \"p,q\", got \"" + key + "\"");
  }
}

Json pair_json(const std::pair<int, int>& pq) { return Json::array({pq.first, pq.second}); }

Bidegree pair_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    bad("expected a pair [p, q], got " + j.dump());
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Fans

Json to_json(const FanSystem& fs) {
  Json cusps = Json::array();
  for (const auto& c : fs.cusps()) {
    Json emb = Json::array();
    for (const auto& e : c.parent_embeddings) emb.push_back({{"parent", e.parent}, {"matrix", matrix_json(e.matrix)}});
    cusps.push_back({{"name", c.name}, {"rank", c.lattice_rank}, {"embeddings", emb}});
  }
  Json cones = Json::array();
  for (const auto& spec : fs.cone_specs(true)) {
    Json rays = Json::array();
    for (const auto& r : spec.rays) rays.push_back(vector_json(r));
    cones.push_back({{"cusp", spec.cusp}, {"rays", rays}});
  }
  Json ids = Json::array();
  for (const auto& s : fs.identification_specs())
    ids.push_back({{"matrix", matrix_json(s.matrix)}, {"source", s.source}, {"target", s.target}});
  Json out{{"cusps", cusps}, {"cones", cones}, {"identifications", ids}};
  if (fs.projectivity_unchecked()) out["projectivity_unchecked"] = true;
  return out;
}

FanSystem fan_system_from_json(const Json& j) {
  std::vector<CuspLabel> cusps;
  std::map<std::string, std::size_t> rank_of;
  for (const auto& c : array_field(j, "cusps")) {
    CuspLabel label;
    label.name = get<std::string>(c, "name");
    label.lattice_rank = get_count(c, "rank");
    rank_of[label.name] = label.lattice_rank;
    if (c.contains("embeddings"))
      for (const auto& e : array_field(c, "embeddings"))
        label.parent_embeddings.push_back({get<std::string>(e, "parent"), int_matrix_from(field(e, "matrix"))});
    cusps.push_back(std::move(label));
  }
  std::vector<ConeSpec> cones;
  for (const auto& c : array_field(j, "cones")) {
    ConeSpec spec;
    spec.cusp = get<std::string>(c, "cusp");
    for (const auto& r : array_field(c, "rays")) spec.rays.push_back(vector_from(r));
    cones.push_back(std::move(spec));
  }
  std::vector<IdentificationSpec> ids;
  if (j.contains("identifications"))
    for (const auto& s : array_field(j, "identifications")) {
      IdentificationSpec spec;
      spec.source = get<std::string>(s, "source");
      spec.target = get<std::string>(s, "target");
      auto it = rank_of.find(spec.source);
      spec.matrix = int_matrix_from(field(s, "matrix"), it == rank_of.end() ? 0 : it->second);
      ids.push_back(std::move(spec));
    }
  FanSystem fs = FanSystem::build(std::move(cusps), cones, ids);
  if (get_or<bool>(j, "projectivity_unchecked", false)) fs.mark_projectivity_unchecked();
  return fs;
}

Json to_json(const SncReport& report, const FanSystem& fs) {
  auto rays_of = [&](std::size_t cone) {
    Json rays = Json::array();
    for (const auto& r : fs.cone(cone).rays) rays.push_back(vector_json(r));
    return rays;
  };
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"cone", v.cone},
                          {"cusp", fs.cusps()[fs.cone(v.cone).cusp].name},
                          {"rays", rays_of(v.cone)},
                          {"pair", Json::array({vector_json(fs.cone(v.ray_a).rays[0]), vector_json(fs.cone(v.ray_b).rays[0])})}});
  return {{"ok", report.ok}, {"violations", violations}};
}

// ---------------------------------------------------------------------------
// Hodge data

Json to_json(const PureHS& hs) {
  Json h = Json::object();
  for (const auto& [pq, d] : hs.h) h[bidegree_key(pq)] = d;
  return {{"weight", hs.weight}, {"h", h}};
}

PureHS pure_hs_from_json(const Json& j) {
  PureHS hs(get<int>(j, "weight"));
  const Json& h = field(j, "h");
  if (!h.is_object()) bad("\"h\" must be an object keyed by \"p,q\"");
  for (const auto& [key, value] : h.items()) {
    if (!value.is_number_integer() || value.get<long long>() < 0) bad("Hodge number for " + key + " must be a nonnegative integer");
    const Bidegree pq = bidegree_from_key(key);
    try {
      hs.add(pq.first, pq.second, value.get<std::size_t>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  return hs;
}

Json to_json(const MixedHSTable& table) {
  Json graded = Json::array();
  for (const auto& [w, hs] : table.graded)
    if (hs.dim() > 0) graded.push_back(to_json(hs));
  return {{"degree", table.degree}, {"dim", table.dim()}, {"graded", graded}};
}

// ---------------------------------------------------------------------------
// Strata complexes

Json to_json(const StrataComplex& sc) {
  Json strata = Json::array();
  for (const auto& s : sc.strata) {
    Json coh = Json::array();
    for (const auto& [deg, hs] : s.cohomology) coh.push_back(to_json(hs));
    strata.push_back({{"id", s.id}, {"index", s.index}, {"cohomology", coh}});
  }
  Json gysin = Json::array();
  for (const auto& g : sc.gysin) {
    Json blocks = Json::array();
    for (const auto& b : g.blocks)
      blocks.push_back({{"bidegree", pair_json(b.bidegree)},
                        {"rows", b.matrix.rows()},
                        {"cols", b.matrix.cols()},
                        {"matrix", rat_matrix_json(b.matrix)}});
    gysin.push_back({{"source", g.source}, {"target", g.target}, {"degree", g.degree}, {"blocks", blocks}});
  }
  Json out{{"n", sc.n}, {"components", sc.components}, {"strata", strata}, {"gysin", gysin}};
  if (!sc.annotations.empty()) {
    Json ann = Json::array();
    for (const auto& a : sc.annotations)
      ann.push_back({{"stratum", a.stratum}, {"cusp", a.cusp}, {"cone", a.cone}, {"d", a.d}});
    out["annotations"] = ann;
  }
  return out;
}

StrataComplex strata_complex_from_json(const Json& j) {
  StrataComplex sc;
  sc.n = get<int>(j, "n");
  sc.components = get<std::vector<std::string>>(j, "components");
  for (const auto& s : array_field(j, "strata")) {
    Stratum st;
    st.id = get_count(s, "id");
    st.index = get<std::vector<std::size_t>>(s, "index");
    for (const auto& hs : array_field(s, "cohomology")) {
      PureHS h = pure_hs_from_json(hs);
      if (!st.cohomology.emplace(h.weight, h).second) bad("stratum " + std::to_string(st.id) + " repeats a degree");
    }
    sc.strata.push_back(std::move(st));
  }
  if (j.contains("gysin"))
    for (const auto& g : array_field(j, "gysin")) {
      GysinMap map;
      map.source = get_count(g, "source");
      map.target = get_count(g, "target");
      map.degree = get<int>(g, "degree");
      for (const auto& b : array_field(g, "blocks")) {
        const std::size_t rows = get_count(b, "rows");
        const std::size_t cols = get_count(b, "cols");
        map.blocks.push_back({pair_from(field(b, "bidegree")), rat_matrix_from(field(b, "matrix"), rows, cols)});
      }
      sc.gysin.push_back(std::move(map));
    }
  if (j.contains("annotations"))
    for (const auto& a : array_field(j, "annotations"))
      sc.annotations.push_back({get_count(a, "stratum"), get<std::string>(a, "cusp"), get_count(a, "cone"), get_count(a, "d")});
  sc.validate();
  return sc;
}

CuspStrataAnnotation cusp_annotation_from_json(const Json& j) {
  CuspStrataAnnotation a;
  if (j.contains("n")) a.n = get<int>(j, "n");
  for (const auto& c : array_field(j, "cusps")) a.cusps.push_back({get<std::string>(c, "cusp"), get_count(c, "d")});
  return a;
}

// ---------------------------------------------------------------------------
// Δ-complexes

Json to_json(const DeltaComplex& dc) {
  Json dims = Json::array();
  for (const auto& layer : dc.simplices) {
    Json arr = Json::array();
    for (const auto& s : layer) arr.push_back({{"id", s.id}, {"vertices", s.vertices}, {"faces", s.faces}, {"cone", s.cone}});
    dims.push_back(arr);
  }
  return {{"dim", dc.dim}, {"vertex_classes", dc.vertex_classes}, {"simplices", dims}};
}

Json to_json(const PseudomanifoldReport& report) {
  Json out{{"betti", report.betti}, {"closed", report.closed}, {"oriented", report.oriented}};
  if (report.fundamental_class) {
    Json fc = Json::array();
    for (std::size_t i = 0; i < report.fundamental_class->size(); ++i)
      fc.push_back({{"id", i}, {"sign", (*report.fundamental_class)[i]}});
    out["fundamental_class"] = fc;
  } else {
    out["fundamental_class"] = nullptr;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectral sequence

Json to_json(const SpectralPage& page) {
  Json entries = Json::array();
  for (const auto& [key, e] : page.entries) {
    if (e.dim() == 0) continue;
    entries.push_back({{"m", e.m}, {"degree", e.degree}, {"column", -e.m}, {"row", e.degree + e.m}, {"hodge", to_json(e.hodge())}});
  }
  Json diffs = Json::array();
  for (const auto& d : page.differentials) {
    Json blocks = Json::array();
    for (const auto& [pq, m] : d.blocks)
      blocks.push_back({{"bidegree", pair_json(pq)}, {"rows", m.rows()}, {"cols", m.cols()}, {"matrix", rat_matrix_json(m)}});
    diffs.push_back({{"source", pair_json(d.source)}, {"blocks", blocks}});
  }
  return {{"k", page.k}, {"n", page.n}, {"entries", entries}, {"d1", diffs}};
}

Json to_json(const FnFiltration& f) {
  Json residues = Json::array();
  for (const auto& r : f.residues) {
    const bool square = r.matrix.rows() == r.matrix.cols();
    residues.push_back({{"stratum", r.stratum},
                        {"m", r.m},
                        {"rows", r.matrix.rows()},
                        {"cols", r.matrix.cols()},
                        {"rank", rank(r.matrix)},
                        {"invertible", square && rank(r.matrix) == r.matrix.rows()}});
  }
  Json kernels = Json::array();
  for (const auto& [m, basis] : f.kernel_basis) kernels.push_back({{"m", m}, {"dim", basis.cols()}, {"ambient", basis.rows()}});
  return {{"n", f.n}, {"graded", f.graded}, {"cumulative", f.cumulative}, {"kernels", kernels}, {"residues", residues}};
}

// ---------------------------------------------------------------------------
// Stairs and corank reports

Json to_json(const CorankData& cd) {
  return {{"label", cd.label}, {"n", cd.n}, {"n_seq", cd.n_seq}, {"c", cd.c}, {"q_simple", cd.q_simple}};
}

CorankData corank_data_from_json(const Json& j) {
  CorankData cd;
  cd.label = get_or<std::string>(j, "label", "");
  cd.n = get<int>(j, "n");
  cd.n_seq = get<std::vector<int>>(j, "n_seq");
  cd.c = get<int>(j, "c");
  cd.q_simple = get_or<bool>(j, "q_simple", false);
  cd.validate();
  return cd;
}

Json to_json(const Region& rg) {
  Json adm = Json::array();
  for (const auto& pq : rg.admissible) adm.push_back(pair_json(pq));
  Json trace = Json::array();
  for (const auto& [pq, rules] : rg.rule_trace) {
    Json rs = Json::array();
    for (const auto& r : rules) rs.push_back({{"rule", r.rule}, {"passed", r.passed}, {"detail", r.detail}});
    trace.push_back({{"p", pq.first}, {"q", pq.second}, {"admissible", rg.contains(pq.first, pq.second)}, {"rules", rs}});
  }
  return {{"k", rg.k}, {"n", rg.n}, {"bound", rg.bound}, {"admissible", adm}, {"trace", trace}};
}

Json to_json(const CuspInventory& inv) {
  Json cusps = Json::array();
  for (const auto& [i, list] : inv.by_corank)
    for (const auto& c : list) cusps.push_back({{"label", c.label}, {"corank", i}, {"dim_S_cat", c.dim_S_cat}, {"dim_U", c.dim_U}});
  Json out{{"cusps", cusps}, {"neat", inv.neat}};
  auto opt = [&](const char* key, const std::optional<std::size_t>& v) {
    if (v) out[key] = *v;
  };
  opt("dim_M_can", inv.dim_M_can);
  opt("dim_S_can", inv.dim_S_can);
  opt("dim_Omega_n_minus_1", inv.dim_Omega_n_minus_1);
  Json n1 = Json::object();
  auto opt1 = [&](const char* key, const std::optional<std::size_t>& v) {
    if (v) n1[key] = *v;
  };
  opt1("gr", inv.n1.gr);
  opt1("sum_h0k", inv.n1.sum_h0k);
  opt1("h_n1", inv.n1.h_n1);
  opt1("fn_w", inv.n1.fn_w);
  if (!n1.empty()) out["n1"] = n1;
  return out;
}

CuspInventory cusp_inventory_from_json(const Json& j) {
  CuspInventory inv;
  for (const auto& c : array_field(j, "cusps")) {
    const int i = get<int>(c, "corank");
    inv.by_corank[i].push_back({get<std::string>(c, "label"), get_count(c, "dim_S_cat"), get_count(c, "dim_U")});
  }
  inv.dim_M_can = get_optional_count(j, "dim_M_can");
  inv.dim_S_can = get_optional_count(j, "dim_S_can");
  inv.dim_Omega_n_minus_1 = get_optional_count(j, "dim_Omega_n_minus_1");
  if (j.contains("n1")) {
    const Json& n1 = field(j, "n1");
    inv.n1.gr = get_optional_count(n1, "gr");
    inv.n1.sum_h0k = get_optional_count(n1, "sum_h0k");
    inv.n1.h_n1 = get_optional_count(n1, "h_n1");
    inv.n1.fn_w = get_optional_count(n1, "fn_w");
  }
  inv.neat = get_or<bool>(j, "neat", true);
  return inv;
}

Json to_json(const CorankReport& report) {
  Json graded = Json::array();
  for (const auto& g : report.graded)
    graded.push_back({{"i", g.i}, {"status", to_string(g.status)}, {"sum_S_cat", g.sum_S_cat}, {"lower", g.lower}, {"upper", g.upper}});
  Json flags = Json::array();
  for (const auto& f : report.flags) {
    Json e{{"i", f.i}, {"flag", to_string(f.flag)}};
    if (f.warning) e["warning"] = *f.warning;
    flags.push_back(e);
  }
  Json ids = Json::array();
  for (const auto& id : report.identities)
    ids.push_back({{"name", id.name}, {"consistent", id.consistent}, {"detail", id.detail}, {"notes", id.notes}});
  return {{"preset", report.preset}, {"consistent", report.consistent()}, {"graded", graded}, {"flags", flags}, {"identities", ids}};
}

}  // namespace snc
