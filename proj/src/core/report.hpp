#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "construct.hpp"
#include "oracle.hpp"
#include "turan_formulas.hpp"

namespace mpex {

enum class Verdict {
  OracleMatchesFormula,
  LowerBoundOnly,
  Mismatch,
  NoFormula,
  Inconclusive,
};

const char* verdict_name(Verdict v) noexcept;

struct MismatchEntry {
  std::string source;  // formula tag or "construction"
  Int value = 0;
  bool in_proved_range = false;
};

/// Everything known about one (ns, t, k) instance.
struct ExtremalReport {
  HostParams params;
  std::vector<std::pair<FormulaId, std::optional<FormulaValue>>> formulas;
  std::optional<Int> construction_edges;
  std::optional<bool> construction_certified;
  std::optional<OracleResult> oracle;
  Verdict verdict = Verdict::NoFormula;
  std::vector<MismatchEntry> mismatches;

  bool proved_mismatch() const noexcept;
  bool potential_counterexample() const noexcept;
};

/// Evaluates every applicable formula, builds and certifies the lower-bound
/// construction and, when requested, runs the oracle, then derives a verdict.
ExtremalReport verify_instance(const SizeMultiset& ns, int t, int k, bool run_oracle,
                               const OracleBudget& budget = {});

/// Verdict from the report's values alone; verify_instance uses this and
/// tests recompute it.
Verdict derive_verdict(const ExtremalReport& r, std::vector<MismatchEntry>* mismatches);

struct SweepOptions {
  int r = 0;
  int t = 2;
  int k_max = 1;
  Int size_max = 1;
  bool oracle = false;
  OracleBudget budget;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t proved_mismatches = 0;
  std::size_t potential_counterexamples = 0;
  std::size_t inconclusive = 0;
};

/// Visits every ascending r-tuple with entries in [1, max_value] in
/// lexicographic order.
void for_each_sorted_tuple(int r, Int max_value,
                           const std::function<void(const std::vector<Int>&)>& visit);

/// One JSON line per (tuple, k), tuples in lexicographic order and k
/// ascending within a tuple.
SweepSummary run_sweep(const SweepOptions& opt,
                       const std::function<void(const std::string&)>& emit);

struct PropsOptions {
  std::string which;  // "2.1", "2.2" or "2.3"
  Int size_max = 15;
  int r_max = 6;
  int k_max = 4;
};

struct PropsReport {
  std::string which;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  std::optional<std::size_t> sharper_form_failures;
  std::vector<nlohmann::ordered_json> examples;
  std::vector<nlohmann::ordered_json> sharper_form_examples;
};

PropsReport run_props(const PropsOptions& opt);

// JSON views. Every object carries a "command" key and a fixed key set per
// command; docs/report_schema.json describes them.
nlohmann::ordered_json ft_json(const SizeMultiset& ns, int t, bool with_witness);
nlohmann::ordered_json formula_json(const HostParams& params, std::optional<FormulaId> which);
nlohmann::ordered_json certificate_json(const Certificate& c);
nlohmann::ordered_json construct_json(const Construction& c, const Certificate& cert,
                                      const std::optional<std::string>& out_path);
nlohmann::ordered_json check_free_json(const MultipartiteGraph& g, int t, int k,
                                       const std::string& source);
nlohmann::ordered_json oracle_json(const SizeMultiset& ns, int t, int k, const OracleResult& r);
nlohmann::ordered_json report_json(const ExtremalReport& r, const char* command);
nlohmann::ordered_json props_json(const PropsOptions& opt, const PropsReport& r);

}  // namespace mpex
