#include "doctest.h"

#include "snc/delta_complex.hpp"
#include "snc/fixtures.hpp"
#include "snc/weight_ss.hpp"

using namespace snc;

namespace {

const IntMatrix kM = IntMatrix::from_rows<int>({{2, 1}, {1, 1}});

RatMatrix kron_identity(const RatMatrix& m, std::size_t d) {
  RatMatrix out(m.rows() * d, m.cols() * d);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t t = 0; t < d; ++t) out(i * d + t, j * d + t) = m(i, j);
  return out;
}

CuspStrataAnnotation annotate_f(std::size_t d) { return {std::nullopt, {CuspDimension{"F", d}}}; }

}  // namespace

TEST_CASE("E1 page of the C* fixture") {
  auto sc = cstar_fixture();
  auto page = e1_page(sc, 1);
  const PageEntry* e = page.entry(1, 1);
  REQUIRE(e);
  CHECK(e->hodge().weight == 2);
  CHECK(e->hodge().at(1, 1) == 2);
  CHECK(page.entry(0, 1)->dim() == 0);

  auto p0 = e1_page(sc, 0);
  CHECK(p0.entry(0, 0)->hodge().at(0, 0) == 1);
  CHECK(p0.entry(1, 0)->dim() == 0);  // H^{-1} of the points
}

TEST_CASE("d1 on the C* fixture") {
  auto sc = cstar_fixture();
  auto page = d1(sc, e1_page(sc, 1));
  const PageDifferential* d = page.differential(1, 1);
  REQUIRE(d);
  CHECK(-d->blocks.at({1, 1}) == RatMatrix::from_rows<int>({{1, 1}}));
}

TEST_CASE("E2 of the C* fixture") {
  auto sc = cstar_fixture();
  auto h1 = weight_graded_cohomology(sc, 1);
  CHECK(h1.graded_dim(2) == 1);
  CHECK(h1.hodge_number(1, 1) == 1);
  CHECK(h1.graded_dim(1) == 0);
  auto h2 = weight_graded_cohomology(sc, 2);
  CHECK(h2.dim() == 0);
  auto h0 = weight_graded_cohomology(sc, 0);
  CHECK(h0.hodge_number(0, 0) == 1);
  for (int k = 0; k <= 2; ++k) CHECK(weight_graded_cohomology(sc, k).weights_in_range(sc.n));
}

TEST_CASE("(P^1)^2 fixture") {
  auto sc = p1xp1_fixture();
  auto page = e1_page(sc, 2);
  CHECK(page.entry(2, 2)->hodge().at(2, 2) == 4);
  CHECK(page.entry(1, 2)->dim() == 0);
  CHECK(page.entry(0, 2)->hodge().at(1, 1) == 2);

  auto with_d = d1(sc, page);
  // -d1 from the points to the lines is the boundary of the square.
  const RatMatrix& sq = with_d.differential(2, 2)->blocks.at({2, 2});
  CHECK(sq.rows() == 4);
  CHECK(sq.cols() == 4);
  CHECK(rank(sq) == 3);

  auto h2 = weight_graded_cohomology(sc, 2);
  CHECK(h2.graded_dim(4) == 1);
  CHECK(h2.hodge_number(2, 2) == 1);
  CHECK(h2.graded_dim(3) == 0);
  CHECK(h2.graded_dim(2) == 0);  // coker [[1,0,1,0],[0,1,0,1]] = 0
  auto h1 = weight_graded_cohomology(sc, 1);
  CHECK(h1.graded_dim(2) == 2);
  CHECK(h1.graded_dim(1) == 0);
  // Total dimensions of the open torus (C*)^2: 1, 2, 1.
  CHECK(weight_graded_cohomology(sc, 0).dim() == 1);
  for (int k = 0; k <= 4; ++k) CHECK(weight_graded_cohomology(sc, k).weights_in_range(sc.n));
  CHECK(weight_graded_cohomology(sc, 3).dim() == 0);
  CHECK(weight_graded_cohomology(sc, 4).dim() == 0);
}

TEST_CASE("d1 composition is checked") {
  auto sc = p1xp1_fixture();
  for (auto& g : sc.gysin)
    if (g.source == 5 && g.target == 1) g.blocks[0].matrix(0, 0) = 2;
  CHECK_THROWS_AS(d1(sc, e1_page(sc, 2)), Error);
  try {
    d1(sc, e1_page(sc, 2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAComplex);
  }
}

TEST_CASE("strata validation") {
  auto sc = cstar_fixture();
  sc.gysin[0].blocks[0].matrix = RatMatrix::from_rows<int>({{1, 2}});
  try {
    sc.validate();
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  auto bad_degree = cstar_fixture();
  bad_degree.strata[1].cohomology[3] = PureHS(3);
  CHECK_THROWS_AS(bad_degree.validate(), Error);
}

TEST_CASE("F^n H^n filtration") {
  // No boundary: only the ambient space.
  StrataComplex plain;
  plain.n = 2;
  Stratum x;
  x.id = 0;
  x.cohomology[2] = PureHS(2);
  x.cohomology[2].add(2, 0, 3);
  plain.strata.push_back(x);
  plain.validate();
  auto f = weight_filtration_on_FnHn(plain);
  CHECK(f.graded == std::vector<std::size_t>{3, 0, 0});
  CHECK(f.cumulative == std::vector<std::size_t>{3, 3, 3});

  auto missing = cstar_fixture();
  missing.strata[0].cohomology.erase(1);
  try {
    weight_filtration_on_FnHn(missing);
    FAIL("expected MissingInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingInput);
  }
}

TEST_CASE("annotated fans reproduce the boundary map") {
  for (auto fs : {two_division_subdivide(hilbert_cusp_window(kM, 3)), hilbert_cusp_window(kM, 3, 3)}) {
    auto dc = quotient_delta_complex(fs, 0);
    auto boundary = boundary_matrices(dc).boundary[1];
    for (std::size_t d : {0, 1, 2, 3}) {
      CAPTURE(d);
      auto sc = annotate_from_fans(fs, annotate_f(d));
      CHECK(sc.n == 2);
      CHECK(sc.annotations.size() == dc.count(1));
      auto page = d1(sc, e1_page(sc, 2));
      const PageDifferential* diff = page.differential(2, 2);
      REQUIRE(diff);
      auto it = diff->blocks.find({2, 2});
      if (d == 0) {
        CHECK(it == diff->blocks.end());
        auto f = weight_filtration_on_FnHn(sc);
        CHECK(f.graded[2] == 0);
        continue;
      }
      REQUIRE(it != diff->blocks.end());
      CHECK(-it->second == kron_identity(boundary, d));

      auto f = weight_filtration_on_FnHn(sc);
      CHECK(f.graded[2] == d);
      CHECK(f.graded[0] == 0);
      CHECK(f.graded[1] == 0);
      for (const auto& r : f.residues) {
        if (r.m != 2) continue;
        REQUIRE(r.matrix.rows() == d);
        REQUIRE(r.matrix.cols() == d);
        CHECK(determinant(r.matrix) != 0);
      }
    }
  }
  CHECK_THROWS_AS(annotate_from_fans(hilbert_cusp_window(kM, 3), annotate_f(1)), Error);
}
