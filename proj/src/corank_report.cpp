#include "snc/corank_report.hpp"

#include <algorithm>

#include "snc/error.hpp"

namespace snc {

std::string to_string(GradedStatus s) {
  switch (s) {
    case GradedStatus::Exact: return "exact";
    case GradedStatus::Bounded: return "bounded";
    case GradedStatus::Conditional: return "conditional";
  }
  return "unknown";
}

std::string to_string(Surjectivity s) {
  return s == Surjectivity::Surjective ? "Surjective" : "Obstructed-by-Omega^{n-1}";
}

std::vector<GradedEntry> graded_dims(const CorankData& cd, const CuspInventory& inv) {
  cd.validate();
  std::vector<GradedEntry> out;
  for (const auto& [i, cusps] : inv.by_corank) {
    if (i < 1 || i > cd.r())
      fail(ErrorCode::InvalidInput, "corank " + std::to_string(i) + " is outside 1.." + std::to_string(cd.r()));
    GradedEntry e;
    e.i = i;
    for (const auto& cusp : cusps) {
      if (static_cast<int>(cusp.dim_U) != cd.n_at(i))
        fail(ErrorCode::InvalidInput, "cusp '" + cusp.label + "' of corank " + std::to_string(i) + " has dim U = " +
                                          std::to_string(cusp.dim_U) + " but n(" + std::to_string(i) +
                                          ") = " + std::to_string(cd.n_at(i)));
      e.sum_S_cat += cusp.dim_S_cat;
    }
    if (cd.gap_condition(i)) {
      e.status = GradedStatus::Exact;
      e.lower = e.upper = e.sum_S_cat;
    } else if (i == 1 && cd.n_at(1) == 1) {
      if (!inv.dim_Omega_n_minus_1)
        fail(ErrorCode::MissingInput, "n(1) = 1 needs dim_Omega_n_minus_1 to bound the corank-1 piece");
      e.status = GradedStatus::Bounded;
      e.upper = e.sum_S_cat;
      e.lower = e.sum_S_cat > *inv.dim_Omega_n_minus_1 ? e.sum_S_cat - *inv.dim_Omega_n_minus_1 : 0;
    } else {
      e.status = GradedStatus::Conditional;
      e.lower = 0;
      e.upper = e.sum_S_cat;
    }
    out.push_back(e);
  }
  return out;
}

std::vector<SurjectivityFlag> surjectivity_flags(const CorankData& cd) {
  cd.validate();
  std::vector<SurjectivityFlag> out;
  for (int i = 1; i <= cd.r(); ++i) {
    SurjectivityFlag f;
    f.i = i;
    if (cd.gap_condition(i)) {
      f.flag = Surjectivity::Surjective;
    } else if (cd.q_simple && i > 1) {
      f.flag = Surjectivity::Surjective;
      f.warning = "n(" + std::to_string(i) + ") - n(" + std::to_string(i - 1) +
                  ") <= 1 contradicts Q-simplicity; flag taken from the Q-simple bit";
    } else {
      f.flag = Surjectivity::ObstructedByOmega;
    }
    out.push_back(f);
  }
  return out;
}

long long exact_sequence_check_n1(const CuspInventory& inv) {
  const auto& s = inv.n1;
  if (!s.gr || !s.sum_h0k || !s.h_n1 || !s.fn_w)
    fail(ErrorCode::MissingInput, "the n(1) = 1 sequence needs gr, sum_h0k, h_n1 and fn_w");
  auto v = [](std::size_t x) { return static_cast<long long>(x); };
  return v(*s.sum_h0k) + v(*s.fn_w) - v(*s.gr) - v(*s.h_n1);
}

std::optional<std::string> nonneat_note(const CuspInventory& inv) {
  if (inv.neat) return std::nullopt;
  return "non-neat group: dimensions are read as G-invariant dimensions over a neat normal subgroup";
}

bool CorankReport::consistent() const {
  return std::all_of(identities.begin(), identities.end(), [](const Identity& i) { return i.consistent; });
}

CorankReport corank_report(const CorankData& cd, const CuspInventory& inv) {
  CorankReport rep;
  rep.preset = cd.label;
  rep.graded = graded_dims(cd, inv);
  rep.flags = surjectivity_flags(cd);

  std::size_t lo = 0, hi = 0;
  for (const auto& e : rep.graded) {
    lo += e.lower;
    hi += e.upper;
    Identity id;
    id.name = "graded_dim_" + std::to_string(e.i);
    id.detail = "dim M^(" + std::to_string(e.i) + ")/M^(" + std::to_string(e.i - 1) + ") in [" +
                std::to_string(e.lower) + ", " + std::to_string(e.upper) + "] (" + to_string(e.status) + ")";
    rep.identities.push_back(std::move(id));
  }

  if (inv.dim_M_can) {
    Identity id;
    id.name = "sum_to_M_can";
    if (inv.dim_S_can) {
      const std::size_t boundary = *inv.dim_M_can >= *inv.dim_S_can ? *inv.dim_M_can - *inv.dim_S_can : 0;
      id.consistent = *inv.dim_M_can >= *inv.dim_S_can && lo <= boundary && boundary <= hi;
      id.detail = "dim M_can - dim S_can = " + std::to_string(boundary) + ", graded sum in [" + std::to_string(lo) +
                  ", " + std::to_string(hi) + "]";
    } else {
      id.consistent = lo <= *inv.dim_M_can;
      id.detail = "graded sum lower bound " + std::to_string(lo) + " <= dim M_can = " + std::to_string(*inv.dim_M_can);
    }
    rep.identities.push_back(std::move(id));
  }

  const int r = cd.r();
  auto top = inv.by_corank.find(r);
  if (cd.tube_domain() && cd.gap_condition(r) && top != inv.by_corank.end()) {
    Identity id;
    id.name = "top_weight_zero_dim_cusps";
    id.detail = "Gr^W_" + std::to_string(2 * cd.n) + " has dimension " + std::to_string(top->second.size()) +
                " = number of 0-dimensional cusps";
    rep.identities.push_back(std::move(id));
  }

  const auto& s = inv.n1;
  if (cd.n_at(1) == 1 && s.gr && s.sum_h0k && s.h_n1 && s.fn_w) {
    const long long defect = exact_sequence_check_n1(inv);
    Identity id;
    id.name = "exact_sequence_n1";
    id.consistent = defect == 0;
    id.detail = "defect " + std::to_string(defect);
    rep.identities.push_back(std::move(id));
  }

  if (auto note = nonneat_note(inv))
    for (auto& id : rep.identities) id.notes.push_back(*note);
  return rep;
}

}  // namespace snc
