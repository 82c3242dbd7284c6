#include "turan_formulas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "partition_opt.hpp"

namespace mpex {

namespace {

std::string str(Wide v) {
  if (v == 0) return "0";
  std::string out;
  const bool neg = v < 0;
  if (neg) v = -v;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

void require_k(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
}

void require_t(int t) {
  if (t < 2) throw Error(ErrorCode::InvalidArgument, "t must be at least 2");
}

FormulaValue make(Wide value, FormulaId id, bool proved, std::string note) {
  return FormulaValue{checked_narrow(value, "formula value"), id, proved, std::move(note)};
}

// Hypothesis check shared by ex_kK3_main and the proved-range detection of
// the shifted form. Empty string means every hypothesis holds.
std::string main_range_failure(const SizeMultiset& ns, int k) {
  if (ns.size() < 4) return "needs r >= 4, got r = " + std::to_string(ns.size());
  const Wide n1 = ns[0];
  if (n1 < Wide{6} * k - 4) {
    return "needs n_1 >= 6k - 4 = " + str(Wide{6} * k - 4) + ", got n_1 = " + str(n1);
  }
  if (ns[1] < n1 + Wide{4} * k) {
    return "needs min(n_2..n_r) >= n_1 + 4k = " + str(n1 + Wide{4} * k) +
           ", got " + str(ns[1]);
  }
  return {};
}

}  // namespace

std::string_view formula_tag(FormulaId id) noexcept {
  switch (id) {
    case FormulaId::CliqueFree: return "thm11";
    case FormulaId::KCliqueFullR: return "thm12";
    case FormulaId::FourPartiteKK3: return "thm13";
    case FormulaId::MainKK3: return "thm16";
    case FormulaId::PartitionMax: return "conj15";
    case FormulaId::ShiftedFt: return "conj16";
    case FormulaId::KMatching: return "kk2";
    case FormulaId::CompleteKK3: return "erdos";
  }
  return "unknown";
}

std::optional<FormulaId> formula_from_tag(std::string_view tag) noexcept {
  for (FormulaId id : kAllFormulas) {
    if (formula_tag(id) == tag) return id;
  }
  return std::nullopt;
}

HostParams::HostParams(SizeMultiset sizes, int t_, int k_)
    : ns(std::move(sizes)), t(t_), k(k_) {
  if (ns.empty()) throw Error(ErrorCode::InvalidArity, "host needs at least one part");
  require_t(t);
  require_k(k);
}

FormulaValue ex_clique(const SizeMultiset& ns, int t) {
  require_t(t);
  if (ns.size() < static_cast<std::size_t>(t)) {
    throw Error(ErrorCode::InvalidArity, "ex(K_{n_1..n_r}, K_t) needs r >= t, got r = " +
                                             std::to_string(ns.size()) + ", t = " +
                                             std::to_string(t));
  }
  return make(f_value(ns, t).value, FormulaId::CliqueFree, true,
              "exact for every r >= t >= 2");
}

FormulaValue ex_kclique_full_r(const SizeMultiset& ns, int k) {
  require_k(k);
  if (ns.size() < 2) {
    throw Error(ErrorCode::InvalidArity, "ex(K_{n_1..n_r}, kK_r) needs r >= 2");
  }
  if (k > ns[0]) {
    throw Error(ErrorCode::OutOfRange, "ex(K_{n_1..n_r}, kK_r) needs k <= n_1, got k = " +
                                           std::to_string(k) + ", n_1 = " + str(ns[0]));
  }
  const Wide n1 = ns[0];
  const Wide n2 = ns[1];
  const Wide direct = ns.pair_product_sum() - n1 * n2 + Wide{k - 1} * n2;

  const auto shifted = ns.with_value(0, ns[0] - (k - 1));
  const Wide via_f = Wide{k - 1} * (ns.total() - n1) +
                     f_general(shifted, static_cast<int>(ns.size())).value;
  if (direct != via_f) {
    throw std::logic_error("kK_r closed forms disagree on " + ns.to_string());
  }
  return make(direct, FormulaId::KCliqueFullR, true,
              "exact for r >= 2 and 1 <= k <= n_1");
}

FormulaValue ex_kK3_fourpartite(const SizeMultiset& ns, int k) {
  require_k(k);
  if (ns.size() != 4) {
    throw Error(ErrorCode::InvalidArity,
                "four-partite formula needs r = 4, got r = " + std::to_string(ns.size()));
  }
  const Wide n1 = ns[0], n2 = ns[1], n3 = ns[2], n4 = ns[3];
  const Wide value = n4 > n2 + n3 ? n4 * (n1 + n2 + n3) + Wide{k - 1} * (n2 + n3)
                                   : (n1 + n4) * (n2 + n3) + Wide{k - 1} * n4;
  return make(value, FormulaId::FourPartiteKK3, false,
              "theorem requires n_1,...,n_4 sufficiently large (unquantified)");
}

FormulaValue conjecture_value(const SizeMultiset& ns, int t, int k) {
  require_t(t);
  require_k(k);
  const std::size_t r = ns.size();
  if (r + 1 < static_cast<std::size_t>(t)) {
    throw Error(ErrorCode::InvalidArity, "shifted f_t form needs r >= t - 1, got r = " +
                                             std::to_string(r) + ", t = " + std::to_string(t));
  }
  if (ns[0] < k) {
    throw Error(ErrorCode::OutOfRange, "shifted f_t form needs n_1 >= k, got n_1 = " +
                                           str(ns[0]) + ", k = " + std::to_string(k));
  }
  const auto shifted = ns.with_value(0, ns[0] - (k - 1));
  const Wide value = Wide{k - 1} * (ns.total() - ns[0]) + f_value(shifted, t).value;

  bool proved = false;
  std::string note;
  if (r + 1 == static_cast<std::size_t>(t)) {
    proved = true;
    note = "host has r = t - 1 parts and contains no K_t; value is e(host)";
  } else if (k == 1) {
    proved = true;
    note = "k = 1 reduces to the clique-free formula";
  } else if (t == 2) {
    proved = true;
    note = "t = 2 reduces to the kK_2 formula (guarded by k <= n_1)";
  } else if (static_cast<std::size_t>(t) == r) {
    proved = true;
    note = "t = r reduces to the kK_r formula";
  } else if (t == 3 && main_range_failure(ns, k).empty()) {
    proved = true;
    note = "t = 3 with r >= 4 and 10k - 4 <= n_1 + 4k <= min(n_2..n_r)";
  } else {
    note = "unproved for r >= t and n_1 >= k; lower bound by construction";
  }
  return make(value, FormulaId::ShiftedFt, proved, std::move(note));
}

FormulaValue conjecture15_value(const SizeMultiset& ns, int t, int k) {
  require_k(k);
  if (t < 3) {
    throw Error(ErrorCode::InvalidArgument, "partition-maximum form needs t >= 3");
  }
  if (ns.size() + 1 < static_cast<std::size_t>(t)) {
    throw Error(ErrorCode::InvalidArity, "partition-maximum form needs r >= t - 1, got r = " +
                                             std::to_string(ns.size()));
  }
  const auto values = ns.values();
  Wide best = -1;
  for_each_partition(values, t - 1,
                     [&](std::span<const Wide> sums, std::span<const std::uint64_t> masks) {
                       Wide spread = 0;
                       for (std::size_t b = 0; b < sums.size(); ++b) {
                         // ns is ascending, so the lowest index carries the minimum.
                         const Wide min_in_block = values[std::countr_zero(masks[b])];
                         spread = std::max(spread, sums[b] - min_in_block);
                       }
                       best = std::max(best, Wide{k - 1} * spread + pair_products(sums));
                     });
  return make(best, FormulaId::PartitionMax, false,
              "unproved partition form (n_1,...,n_r sufficiently large)");
}

FormulaValue ex_kK3_main(const SizeMultiset& ns, int k) {
  require_k(k);
  if (auto failure = main_range_failure(ns, k); !failure.empty()) {
    throw Error(ErrorCode::OutOfRange, "main kK_3 formula " + failure);
  }
  auto value = conjecture_value(ns, 3, k);
  return make(value.value, FormulaId::MainKK3, true,
              "exact for r >= 4 and 10k - 4 <= n_1 + 4k <= min(n_2..n_r)");
}

FormulaValue ex_kmatching(const SizeMultiset& ns, int k) {
  require_k(k);
  if (ns.size() < 2) {
    throw Error(ErrorCode::InvalidArity, "kK_2 formula needs r >= 2");
  }
  if (k > ns[0]) {
    throw Error(ErrorCode::OutOfRange, "kK_2 formula guarded by k <= n_1, got k = " +
                                           std::to_string(k) + ", n_1 = " + str(ns[0]));
  }
  const Wide value = Wide{k - 1} * (ns.total() - ns[0]);
  if (value != conjecture_value(ns, 2, k).value) {
    throw std::logic_error("kK_2 formula disagrees with the shifted f_2 form");
  }
  return make(value, FormulaId::KMatching, true,
              "exact for k <= n_1 (guard is conservative)");
}

Wide erdos_edge_count(Int n, int k) {
  require_k(k);
  const Wide m = Wide{n} - (k - 1);
  if (m < 0) throw Error(ErrorCode::OutOfRange, "needs n >= k - 1");
  const Wide apex = k - 1;
  return apex * (apex - 1) / 2 + apex * m + (m * m) / 4;
}

FormulaValue ex_kK3_complete(Int n, int k) {
  require_k(k);
  if (Wide{n} < Wide{3} * k) {
    throw Error(ErrorCode::OutOfRange, "ex(K_n, kK_3) formula needs n >= 3k, got n = " +
                                           std::to_string(n) + ", k = " + std::to_string(k));
  }
  const bool proved = Wide{2} * n > Wide{9} * k + 8;
  return make(erdos_edge_count(n, k), FormulaId::CompleteKK3, proved,
              proved ? "exact for n > 9k/2 + 4"
                     : "outside the proved range n > 9k/2 + 4");
}

FormulaValue evaluate_formula(FormulaId id, const HostParams& p) {
  auto need_t = [&](int t) {
    if (p.t != t) {
      throw Error(ErrorCode::InvalidArgument, std::string(formula_tag(id)) +
                                                  " requires t = " + std::to_string(t));
    }
  };
  switch (id) {
    case FormulaId::CliqueFree:
      if (p.k != 1) throw Error(ErrorCode::InvalidArgument, "thm11 requires k = 1");
      return ex_clique(p.ns, p.t);
    case FormulaId::KCliqueFullR:
      need_t(static_cast<int>(p.ns.size()));
      return ex_kclique_full_r(p.ns, p.k);
    case FormulaId::FourPartiteKK3:
      need_t(3);
      return ex_kK3_fourpartite(p.ns, p.k);
    case FormulaId::MainKK3:
      need_t(3);
      return ex_kK3_main(p.ns, p.k);
    case FormulaId::PartitionMax:
      return conjecture15_value(p.ns, p.t, p.k);
    case FormulaId::ShiftedFt:
      return conjecture_value(p.ns, p.t, p.k);
    case FormulaId::KMatching:
      need_t(2);
      return ex_kmatching(p.ns, p.k);
    case FormulaId::CompleteKK3:
      need_t(3);
      if (p.ns[p.ns.size() - 1] != 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "erdos requires a complete host K_n (all part sizes 1)");
      }
      return ex_kK3_complete(static_cast<Int>(p.ns.size()), p.k);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown formula");
}

}  // namespace mpex
