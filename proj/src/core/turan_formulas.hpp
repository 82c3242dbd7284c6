#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "multiset.hpp"

namespace mpex {

/// Which result a formula value comes from.
enum class FormulaId {
  CliqueFree,         // ex(K_{n_1..n_r}, K_t)
  KCliqueFullR,       // ex(K_{n_1..n_r}, kK_r)
  FourPartiteKK3,     // ex(K_{n_1..n_4}, kK_3), sufficiently large parts
  MainKK3,            // ex(K_{n_1..n_r}, kK_3) for r >= 4, n_1 + 4k <= n_2 ...
  PartitionMax,       // max over partitions of (k-1) n_P + pair sums
  ShiftedFt,          // (k-1)(n - n_1) + f_t(n_1 - (k-1), n_2, ..., n_r)
  KMatching,          // ex(K_{n_1..n_r}, kK_2)
  CompleteKK3,        // ex(K_n, kK_3)
};

inline constexpr FormulaId kAllFormulas[] = {
    FormulaId::CliqueFree,   FormulaId::KCliqueFullR, FormulaId::FourPartiteKK3,
    FormulaId::MainKK3,      FormulaId::PartitionMax, FormulaId::ShiftedFt,
    FormulaId::KMatching,    FormulaId::CompleteKK3,
};

/// Short tag used on the command line and in reports (thm11, conj16, ...).
std::string_view formula_tag(FormulaId id) noexcept;
std::optional<FormulaId> formula_from_tag(std::string_view tag) noexcept;

struct FormulaValue {
  Int value = 0;
  FormulaId id = FormulaId::CliqueFree;
  bool in_proved_range = false;
  std::string range_note;
};

/// Host parameters: part sizes (ascending), forbidden clique order t and
/// number of disjoint copies k.
struct HostParams {
  SizeMultiset ns;
  int t = 2;
  int k = 1;

  HostParams() = default;
  HostParams(SizeMultiset sizes, int t_, int k_);
  Wide n() const noexcept { return ns.total(); }
};

FormulaValue ex_clique(const SizeMultiset& ns, int t);
FormulaValue ex_kclique_full_r(const SizeMultiset& ns, int k);
FormulaValue ex_kK3_fourpartite(const SizeMultiset& ns, int k);
FormulaValue conjecture_value(const SizeMultiset& ns, int t, int k);
FormulaValue conjecture15_value(const SizeMultiset& ns, int t, int k);
FormulaValue ex_kK3_main(const SizeMultiset& ns, int k);
FormulaValue ex_kmatching(const SizeMultiset& ns, int k);
FormulaValue ex_kK3_complete(Int n, int k);

/// e(K_{k-1} v T_2(n-k+1)); the quantity behind ex_kK3_complete without its
/// n >= 3k guard.
Wide erdos_edge_count(Int n, int k);

/// Evaluates `id` on a host described as part sizes. CompleteKK3 requires all
/// parts to be singletons (the host is K_n) and t = 3.
FormulaValue evaluate_formula(FormulaId id, const HostParams& params);

}  // namespace mpex
