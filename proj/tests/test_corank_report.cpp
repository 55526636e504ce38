#include "doctest.h"

#include "snc/corank_report.hpp"
#include "snc/error.hpp"

using namespace snc;

namespace {

CorankData custom(int n, std::vector<int> seq, int c) {
  CorankData cd;
  cd.n = n;
  cd.n_seq = std::move(seq);
  cd.c = c;
  return cd;
}

std::vector<CuspEntry> cusps(std::initializer_list<std::size_t> dims, std::size_t dim_u) {
  std::vector<CuspEntry> out;
  int i = 0;
  for (auto d : dims) out.push_back({"F" + std::to_string(i++), d, dim_u});
  return out;
}

}  // namespace

TEST_CASE("graded dimensions") {
  CuspInventory inv;
  inv.by_corank[1] = cusps({2, 3}, 3);
  auto g = graded_dims(custom(3, {3}, 1), inv);
  REQUIRE(g.size() == 1);
  CHECK(g[0].status == GradedStatus::Exact);
  CHECK(g[0].lower == 5);
  CHECK(g[0].upper == 5);

  CuspInventory top;
  top.by_corank[2] = cusps({1, 1, 1, 1, 1, 1, 1}, 3);
  auto sp2 = preset_sp(2);
  auto gt = graded_dims(sp2, top);
  CHECK(gt[0].lower == 7);
  auto rep = corank_report(sp2, top);
  bool found = false;
  for (const auto& id : rep.identities)
    if (id.name == "top_weight_zero_dim_cusps") {
      found = true;
      CHECK(id.detail.find(" 7 ") != std::string::npos);
    }
  CHECK(found);

  CuspInventory n1;
  n1.by_corank[1] = cusps({4}, 1);
  n1.dim_Omega_n_minus_1 = 1;
  auto b = graded_dims(custom(4, {1, 4}, 3), n1);
  CHECK(b[0].status == GradedStatus::Bounded);
  CHECK(b[0].lower == 3);
  CHECK(b[0].upper == 4);

  n1.dim_Omega_n_minus_1.reset();
  try {
    graded_dims(custom(4, {1, 4}, 3), n1);
    FAIL("expected MissingInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingInput);
  }

  CuspInventory cond;
  cond.by_corank[2] = cusps({2}, 2);
  auto c = graded_dims(custom(4, {1, 2}, 1), cond);
  CHECK(c[0].status == GradedStatus::Conditional);
  CHECK(c[0].lower == 0);
  CHECK(c[0].upper == 2);

  CuspInventory wrong;
  wrong.by_corank[1] = cusps({1}, 2);
  CHECK_THROWS_AS(graded_dims(sp2, wrong), Error);
}

TEST_CASE("surjectivity flags") {
  auto sp = surjectivity_flags(preset_sp(2));
  CHECK(sp[1].flag == Surjectivity::Surjective);
  CHECK(sp[0].flag == Surjectivity::ObstructedByOmega);
  auto o = surjectivity_flags(preset_o2n(5));
  CHECK(o[0].flag == Surjectivity::ObstructedByOmega);
  CHECK(o[1].flag == Surjectivity::Surjective);
  auto cu = surjectivity_flags(custom(5, {2, 5}, 1));
  CHECK(cu[0].flag == Surjectivity::Surjective);
  for (int g = 2; g <= 5; ++g)
    for (const auto& f : surjectivity_flags(preset_sp(g)))
      if (f.i > 1) CHECK(f.flag == Surjectivity::Surjective);
  for (int p = 1; p <= 4; ++p)
    for (const auto& f : surjectivity_flags(preset_u(p, p + 1)))
      if (f.i > 1) CHECK(f.flag == Surjectivity::Surjective);

  // Q-simple bit with a gap of 1 at i > 1: Surjective, with a warning.
  auto odd = custom(5, {1, 2}, 1);
  odd.q_simple = true;
  auto w = surjectivity_flags(odd);
  CHECK(w[1].flag == Surjectivity::Surjective);
  CHECK(w[1].warning.has_value());
  odd.q_simple = false;
  CHECK(surjectivity_flags(odd)[1].flag == Surjectivity::ObstructedByOmega);
}

TEST_CASE("raising n(1) past 1 changes only the first two flags") {
  for (int n = 4; n <= 8; ++n) {
    auto a = surjectivity_flags(custom(n, {1, 3, n}, 1));
    auto b = surjectivity_flags(custom(n, {2, 3, n}, 1));
    CHECK(a[0].flag == Surjectivity::ObstructedByOmega);
    CHECK(b[0].flag == Surjectivity::Surjective);
    CHECK(a[1].flag == Surjectivity::Surjective);
    CHECK(b[1].flag == Surjectivity::ObstructedByOmega);
    for (std::size_t i = 2; i < a.size(); ++i) CHECK(a[i].flag == b[i].flag);
  }
}

TEST_CASE("exact sequence for n(1) = 1") {
  auto with = [](std::size_t gr, std::size_t h0k, std::size_t hn1, std::size_t fnw) {
    CuspInventory inv;
    inv.n1 = {gr, h0k, hn1, fnw};
    return inv;
  };
  CHECK(exact_sequence_check_n1(with(1, 2, 1, 0)) == 0);
  CHECK(exact_sequence_check_n1(with(0, 0, 0, 0)) == 0);
  CHECK(exact_sequence_check_n1(with(1, 2, 1, 1)) == 1);
  CHECK_THROWS_AS(exact_sequence_check_n1(CuspInventory{}), Error);

  auto inv = with(1, 2, 1, 1);
  inv.by_corank[1] = cusps({2}, 1);
  inv.dim_Omega_n_minus_1 = 1;
  auto rep = corank_report(preset_o2n(4), inv);
  CHECK_FALSE(rep.consistent());
}

TEST_CASE("sum against dim M_can") {
  CuspInventory inv;
  inv.by_corank[2] = cusps({1, 1, 1}, 3);
  inv.by_corank[1] = cusps({2}, 1);
  inv.dim_Omega_n_minus_1 = 0;
  inv.dim_M_can = 10;
  inv.dim_S_can = 5;
  auto rep = corank_report(preset_sp(2), inv);
  CHECK(rep.consistent());
  inv.dim_S_can = 6;
  CHECK_FALSE(corank_report(preset_sp(2), inv).consistent());
  inv.dim_S_can.reset();
  inv.dim_M_can = 4;
  CHECK_FALSE(corank_report(preset_sp(2), inv).consistent());
}

TEST_CASE("non-neat annotation") {
  CuspInventory inv;
  CHECK_FALSE(nonneat_note(inv));
  inv.neat = false;
  inv.by_corank[2] = cusps({1, 1, 1}, 3);
  REQUIRE(nonneat_note(inv));
  auto rep = corank_report(preset_sp(2), inv);
  REQUIRE_FALSE(rep.identities.empty());
  for (const auto& id : rep.identities) {
    REQUIRE(id.notes.size() == 1);
    CHECK(id.notes[0] == *nonneat_note(inv));
  }
  CHECK(graded_dims(preset_sp(2), inv)[0].lower == 3);
}

TEST_CASE("reports are pure") {
  CuspInventory inv;
  inv.by_corank[2] = cusps({1, 2}, 3);
  auto a = corank_report(preset_sp(2), inv);
  auto b = corank_report(preset_sp(2), inv);
  REQUIRE(a.identities.size() == b.identities.size());
  for (std::size_t i = 0; i < a.identities.size(); ++i) CHECK(a.identities[i].detail == b.identities[i].detail);
}
