#include "snc/fixtures.hpp"

namespace snc {

namespace {

IntMatrix power_of(const IntMatrix& m, std::size_t e) {
  IntMatrix out = IntMatrix::identity(m.rows());
  for (std::size_t i = 0; i < e; ++i) out = out * m;
  return out;
}

PureHS hs(int weight, std::initializer_list<std::tuple<int, int, std::size_t>> entries) {
  PureHS out(weight);
  for (const auto& [p, q, d] : entries) out.add(p, q, d);
  return out;
}

RatMatrix column(std::initializer_list<int> entries) {
  RatMatrix out(entries.size(), 1);
  std::size_t i = 0;
  for (int e : entries) out(i++, 0) = e;
  return out;
}

}  // namespace

FanSystem hilbert_cusp_window(const IntMatrix& m, std::size_t length, std::size_t power) {
  if (m.rows() != 2 || m.cols() != 2) fail(ErrorCode::InvalidParams, "hilbert_cusp_window needs a 2x2 matrix");
  if (length == 0 || power == 0) fail(ErrorCode::InvalidParams, "window length and power must be positive");
  std::vector<IntVector> rays{IntVector{1, 0}};
  for (std::size_t k = 0; k < length; ++k) rays.push_back(m.apply(rays.back()));
  std::vector<ConeSpec> cones;
  for (std::size_t k = 0; k < length; ++k) cones.push_back({"F", {rays[k], rays[k + 1]}});
  return FanSystem::build({CuspLabel{"F", 2, {}}}, cones, {IdentificationSpec{power_of(m, power), "F", "F"}});
}

StrataComplex cstar_fixture() {
  StrataComplex sc;
  sc.n = 1;
  sc.components = {"zero", "infinity"};
  sc.strata.push_back({0, {}, {{0, hs(0, {{0, 0, 1}})}, {1, hs(1, {})}, {2, hs(2, {{1, 1, 1}})}}});
  sc.strata.push_back({1, {0}, {{0, hs(0, {{0, 0, 1}})}}});
  sc.strata.push_back({2, {1}, {{0, hs(0, {{0, 0, 1}})}}});
  for (std::size_t p : {1, 2}) sc.gysin.push_back({p, 0, 0, {GysinBlock{{0, 0}, column({1})}}});
  sc.validate();
  return sc;
}

StrataComplex p1xp1_fixture() {
  StrataComplex sc;
  sc.n = 2;
  sc.components = {"D1", "D2", "D3", "D4"};
  sc.strata.push_back(
      {0, {}, {{0, hs(0, {{0, 0, 1}})}, {1, hs(1, {})}, {2, hs(2, {{1, 1, 2}})}, {3, hs(3, {})}, {4, hs(4, {{2, 2, 1}})}}});
  for (std::size_t i = 0; i < 4; ++i)
    sc.strata.push_back({i + 1, {i}, {{0, hs(0, {{0, 0, 1}})}, {1, hs(1, {})}, {2, hs(2, {{1, 1, 1}})}}});
  const std::vector<std::vector<std::size_t>> points{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  for (std::size_t i = 0; i < points.size(); ++i) sc.strata.push_back({i + 5, points[i], {{0, hs(0, {{0, 0, 1}})}}});

  // D1, D3 have class h1 and D2, D4 have class h2 in H^2.
  for (std::size_t i = 0; i < 4; ++i) {
    sc.gysin.push_back({i + 1, 0, 0, {GysinBlock{{0, 0}, i % 2 == 0 ? column({1, 0}) : column({0, 1})}}});
    sc.gysin.push_back({i + 1, 0, 2, {GysinBlock{{1, 1}, column({1})}}});
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (auto line : points[i]) sc.gysin.push_back({i + 5, line + 1, 0, {GysinBlock{{0, 0}, column({1})}}});
  sc.validate();
  return sc;
}

std::vector<std::string> fixture_names() { return {"hilbert", "hilbert-m3", "cstar", "p1xp1"}; }

}  // namespace snc
