#pragma once

// Dimension bookkeeping for the Siegel operators of each corank: only the
// numerical identities are checked, no modular forms are computed.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snc/stairs.hpp"

namespace snc {

struct CuspEntry {
  std::string label;
  std::size_t dim_S_cat = 0;
  std::size_t dim_U = 0;
};

/// Inputs of the n(1) = 1 exact sequence
/// 0 -> Gr^W_{n+1}F^n -> ⊕ H^0(K) -> H^{n,1} -> F^nW_{n+1}H^{n+1} -> 0.
struct ExactSequenceN1 {
  std::optional<std::size_t> gr;       // dim Gr^W_{n+1} F^n H^n
  std::optional<std::size_t> sum_h0k;  // Σ dim H^0(K)
  std::optional<std::size_t> h_n1;     // dim H^{n,1}
  std::optional<std::size_t> fn_w;     // dim F^n W_{n+1} H^{n+1}
};

struct CuspInventory {
  std::map<int, std::vector<CuspEntry>> by_corank;
  std::optional<std::size_t> dim_M_can;
  std::optional<std::size_t> dim_S_can;
  std::optional<std::size_t> dim_Omega_n_minus_1;
  ExactSequenceN1 n1;
  bool neat = true;
};

enum class GradedStatus { Exact, Bounded, Conditional };

struct GradedEntry {
  int i = 0;
  GradedStatus status = GradedStatus::Exact;
  std::size_t sum_S_cat = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
};

/// dim M^{(i)}/M^{(i-1)} per corank listed in the inventory.
std::vector<GradedEntry> graded_dims(const CorankData& cd, const CuspInventory& inv);

enum class Surjectivity { Surjective, ObstructedByOmega };

struct SurjectivityFlag {
  int i = 0;
  Surjectivity flag = Surjectivity::Surjective;
  std::optional<std::string> warning;
};

std::vector<SurjectivityFlag> surjectivity_flags(const CorankData& cd);

/// Σ H^0(K) + F^nW - Gr - H^{n,1}; zero when the sequence is exact.
long long exact_sequence_check_n1(const CuspInventory& inv);

/// Attached to every identity when the arithmetic group is not neat.
std::optional<std::string> nonneat_note(const CuspInventory& inv);

struct Identity {
  std::string name;
  bool consistent = true;
  std::string detail;
  std::vector<std::string> notes;
};

struct CorankReport {
  std::string preset;
  std::vector<GradedEntry> graded;
  std::vector<SurjectivityFlag> flags;
  std::vector<Identity> identities;

  bool consistent() const;
};

CorankReport corank_report(const CorankData& cd, const CuspInventory& inv);

std::string to_string(GradedStatus s);
std::string to_string(Surjectivity s);

}  // namespace snc
