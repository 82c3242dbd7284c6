#include "report.hpp"

#include <algorithm>

#include "partition_opt.hpp"

namespace mpex {

using nlohmann::ordered_json;

namespace {

ordered_json sizes_json(const SizeMultiset& ns) {
  auto out = ordered_json::array();
  for (Int v : ns) out.push_back(v);
  return out;
}

ordered_json partition_json(const PartitionAssignment& p) {
  auto out = ordered_json::array();
  for (const auto& block : p.blocks()) {
    auto b = ordered_json::array();
    for (int e : block) b.push_back(e + 1);
    out.push_back(std::move(b));
  }
  return out;
}

ordered_json witness_json(const std::optional<PackingWitness>& w) {
  if (!w) return nullptr;
  auto out = ordered_json::array();
  for (const auto& c : w->cliques) out.push_back(c);
  return out;
}

ordered_json formula_value_json(const FormulaValue& v) {
  ordered_json out;
  out["value"] = v.value;
  out["in_proved_range"] = v.in_proved_range;
  out["range_note"] = v.range_note;
  return out;
}

ordered_json optional_int(const std::optional<Int>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json oracle_summary_json(const OracleResult& r) {
  ordered_json out;
  out["host_edges"] = r.host_edges;
  out["value"] = optional_int(r.value);
  out["deletions"] = optional_int(r.deletions);
  out["value_lower"] = r.value_lower;
  out["value_upper"] = r.value_upper;
  out["nodes_explored"] = r.nodes_explored;
  out["timed_out"] = r.timed_out;
  out["exact"] = r.value.has_value();
  return out;
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::OracleMatchesFormula: return "ORACLE_MATCHES_FORMULA";
    case Verdict::LowerBoundOnly: return "LOWER_BOUND_ONLY";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::NoFormula: return "NO_FORMULA";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

bool ExtremalReport::proved_mismatch() const noexcept {
  return std::any_of(mismatches.begin(), mismatches.end(),
                     [](const MismatchEntry& m) { return m.in_proved_range; });
}

bool ExtremalReport::potential_counterexample() const noexcept {
  return verdict == Verdict::Mismatch && !proved_mismatch();
}

Verdict derive_verdict(const ExtremalReport& r, std::vector<MismatchEntry>* mismatches) {
  std::vector<MismatchEntry> found;
  const bool any_formula =
      std::any_of(r.formulas.begin(), r.formulas.end(),
                  [](const auto& f) { return f.second.has_value(); });

  // The construction is a proved lower bound; a failed certificate is a
  // defect regardless of the oracle.
  if (r.construction_certified && !*r.construction_certified) {
    found.push_back({"construction", r.construction_edges.value_or(0), true});
  }

  Verdict verdict;
  if (r.oracle && r.oracle->value) {
    const Int exact = *r.oracle->value;
    for (const auto& [id, value] : r.formulas) {
      if (value && value->value != exact) {
        found.push_back({std::string(formula_tag(id)), value->value, value->in_proved_range});
      }
    }
    if (r.construction_edges && *r.construction_edges > exact) {
      found.push_back({"construction", *r.construction_edges, true});
    }
    verdict = !found.empty() ? Verdict::Mismatch
              : any_formula  ? Verdict::OracleMatchesFormula
                             : Verdict::NoFormula;
  } else if (r.oracle) {
    verdict = found.empty() ? Verdict::Inconclusive : Verdict::Mismatch;
  } else if (!found.empty()) {
    verdict = Verdict::Mismatch;
  } else {
    verdict = r.construction_edges ? Verdict::LowerBoundOnly : Verdict::NoFormula;
  }
  if (mismatches) *mismatches = std::move(found);
  return verdict;
}

ExtremalReport verify_instance(const SizeMultiset& ns, int t, int k, bool run_oracle,
                               const OracleBudget& budget) {
  ExtremalReport report;
  report.params = HostParams(ns, t, k);
  for (FormulaId id : kAllFormulas) {
    std::optional<FormulaValue> value;
    try {
      value = evaluate_formula(id, report.params);
    } catch (const Error&) {
      // Hypotheses not met: the formula does not apply to this instance.
    }
    report.formulas.emplace_back(id, std::move(value));
  }

  if (ns.size() >= static_cast<std::size_t>(t) && ns[0] >= k &&
      ns.total() <= kMaxVertices) {
    const auto built = build_lower_bound_graph(ns, t, k);
    const auto expected = conjecture_value(ns, t, k).value;
    const auto cert = certify(built.graph, t, k, expected);
    report.construction_edges = static_cast<Int>(cert.edges_measured);
    report.construction_certified = cert.passed();
  }

  if (run_oracle && ns.pair_product_sum() <= kMaxOracleEdges) {
    report.oracle = brute_force_ex(ns, t, k, budget);
  }
  report.verdict = derive_verdict(report, &report.mismatches);
  return report;
}

void for_each_sorted_tuple(int r, Int max_value,
                           const std::function<void(const std::vector<Int>&)>& visit) {
  if (r < 1 || max_value < 1) return;
  std::vector<Int> tuple(r, 1);
  while (true) {
    visit(tuple);
    int i = r - 1;
    while (i >= 0 && tuple[i] == max_value) --i;
    if (i < 0) return;
    ++tuple[i];
    for (int j = i + 1; j < r; ++j) tuple[j] = tuple[i];
  }
}

SweepSummary run_sweep(const SweepOptions& opt,
                       const std::function<void(const std::string&)>& emit) {
  if (opt.r < 1 || opt.t < 2 || opt.k_max < 1 || opt.size_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "sweep needs r >= 1, t >= 2, k-max >= 1, size-max >= 1");
  }
  if (opt.size_max * opt.r > kMaxVertices) {
    throw Error(ErrorCode::OutOfRange, "sweep hosts would exceed " +
                                           std::to_string(kMaxVertices) + " vertices");
  }
  SweepSummary summary;
  for_each_sorted_tuple(opt.r, opt.size_max, [&](const std::vector<Int>& tuple) {
    const SizeMultiset ns(tuple);
    for (int k = 1; k <= opt.k_max; ++k) {
      const auto report = verify_instance(ns, opt.t, k, opt.oracle, opt.budget);
      ++summary.instances;
      if (report.proved_mismatch()) ++summary.proved_mismatches;
      if (report.potential_counterexample()) ++summary.potential_counterexamples;
      if (report.verdict == Verdict::Inconclusive) ++summary.inconclusive;
      emit(report_json(report, "sweep").dump());
    }
  });
  return summary;
}

namespace {

Int f3(std::vector<Int> values) { return f_value(SizeMultiset(std::move(values)), 3).value; }

ordered_json tuple_json(const std::vector<Int>& v) { return ordered_json(v); }

void note_example(std::vector<ordered_json>& list, ordered_json example) {
  if (list.size() < 20) list.push_back(std::move(example));
}

void props_equivalence(const PropsOptions& opt, PropsReport& out) {
  for (int r = 4; r <= opt.r_max; ++r) {
    for_each_sorted_tuple(r, opt.size_max, [&](const std::vector<Int>& tuple) {
      const SizeMultiset ns(tuple);
      for (int t = 3; t <= r - 1; ++t) {
        for (int k = 2; k <= opt.k_max; ++k) {
          if (ns[0] < k) continue;
          ++out.checked;
          const Int partition_form = conjecture15_value(ns, t, k).value;
          const Int shifted_form = conjecture_value(ns, t, k).value;
          if (partition_form != shifted_form) {
            ++out.violations;
            ordered_json ex;
            ex["sizes"] = tuple_json(tuple);
            ex["t"] = t;
            ex["k"] = k;
            ex["lhs"] = partition_form;
            ex["rhs"] = shifted_form;
            note_example(out.examples, std::move(ex));
          }
        }
      }
    });
  }
}

void props_transfer(const PropsOptions& opt, PropsReport& out) {
  for (int r = 2; r <= opt.r_max; ++r) {
    for_each_sorted_tuple(r, opt.size_max, [&](const std::vector<Int>& tuple) {
      const Int base = f3(tuple);
      for (int a = 0; a < r; ++a) {
        if (a > 0 && tuple[a] == tuple[a - 1]) continue;
        for (int mu = 0; mu < r; ++mu) {
          if (mu == a) continue;
          // Equal values at other positions give the same multiset.
          bool repeat = false;
          for (int j = 0; j < mu; ++j) repeat |= j != a && tuple[j] == tuple[mu];
          if (repeat) continue;
          if (tuple[mu] - 1 < tuple[a] + 1) continue;
          ++out.checked;
          auto moved = tuple;
          moved[a] += 1;
          moved[mu] -= 1;
          const Int lhs = f3(moved);
          const Int rhs = base + tuple[mu] - (tuple[a] + 1);
          if (lhs > rhs) {
            ++out.violations;
            ordered_json ex;
            ex["sizes"] = tuple_json(tuple);
            ex["raised"] = a + 1;
            ex["lowered"] = mu + 1;
            ex["lhs"] = lhs;
            ex["rhs"] = rhs;
            note_example(out.examples, std::move(ex));
          }
        }
      }
    });
  }
}

void props_double_decrement(const PropsOptions& opt, PropsReport& out) {
  out.sharper_form_failures = 0;
  for (int r = 2; r <= opt.r_max; ++r) {
    for_each_sorted_tuple(r, opt.size_max, [&](const std::vector<Int>& tuple) {
      if (tuple[0] + 2 > tuple[1]) return;
      const Int base = f3(tuple);
      Int total = 0;
      for (Int v : tuple) total += v;
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          if (i == j) continue;
          if (tuple[i] == 1 || tuple[j] == 1) {
            ++out.skipped;
            continue;
          }
          ++out.checked;
          auto lowered = tuple;
          lowered[i] -= 1;
          lowered[j] -= 1;
          const Int lhs = f3(lowered);
          const Int bound = base - total + std::max(tuple[0] + 2, tuple[i] - tuple[0] + 1);
          const Int sharper = base - total +
                              std::max(tuple[0] + 2, std::min(tuple[i], tuple[j]) - tuple[0] + 1);
          ordered_json ex;
          ex["sizes"] = tuple_json(tuple);
          ex["i"] = i + 1;
          ex["j"] = j + 1;
          ex["lhs"] = lhs;
          if (lhs > bound) {
            ++out.violations;
            ex["rhs"] = bound;
            note_example(out.examples, ex);
          }
          if (lhs > sharper) {
            ++*out.sharper_form_failures;
            ex["rhs"] = sharper;
            note_example(out.sharper_form_examples, ex);
          }
        }
      }
    });
  }
}

}  // namespace

PropsReport run_props(const PropsOptions& opt) {
  if (opt.size_max < 1 || opt.r_max < 1 || opt.k_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "props needs size-max, r-max and k-max >= 1");
  }
  if (opt.r_max > 12) {
    throw Error(ErrorCode::OutOfRange, "props sweeps are limited to r-max <= 12");
  }
  PropsReport out;
  out.which = opt.which;
  if (opt.which == "2.1") {
    props_equivalence(opt, out);
  } else if (opt.which == "2.2") {
    props_transfer(opt, out);
  } else if (opt.which == "2.3") {
    props_double_decrement(opt, out);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown props check '" + opt.which +
                                                "' (expected 2.1, 2.2 or 2.3)");
  }
  return out;
}

ordered_json ft_json(const SizeMultiset& ns, int t, bool with_witness) {
  const auto result = f_value(ns, t);
  ordered_json out;
  out["command"] = "ft";
  out["sizes"] = sizes_json(ns);
  out["t"] = t;
  out["value"] = result.value;
  if (with_witness && result.witness) {
    out["witness"] = partition_json(*result.witness);
    auto sums = ordered_json::array();
    for (Wide s : result.witness->block_sums(ns)) sums.push_back(checked_narrow(s, "block sum"));
    out["block_sums"] = std::move(sums);
  } else {
    out["witness"] = nullptr;
    out["block_sums"] = nullptr;
  }
  return out;
}

ordered_json formula_json(const HostParams& params, std::optional<FormulaId> which) {
  ordered_json out;
  out["command"] = "formula";
  out["sizes"] = sizes_json(params.ns);
  out["t"] = params.t;
  out["k"] = params.k;
  auto results = ordered_json::array();
  for (FormulaId id : kAllFormulas) {
    if (which && *which != id) continue;
    ordered_json entry;
    entry["formula"] = formula_tag(id);
    try {
      const auto v = evaluate_formula(id, params);
      entry["value"] = v.value;
      entry["in_proved_range"] = v.in_proved_range;
      entry["range_note"] = v.range_note;
      entry["error"] = nullptr;
    } catch (const Error& e) {
      if (which) throw;
      entry["value"] = nullptr;
      entry["in_proved_range"] = nullptr;
      entry["range_note"] = nullptr;
      entry["error"] = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    results.push_back(std::move(entry));
  }
  out["results"] = std::move(results);
  return out;
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json out;
  out["edges_measured"] = c.edges_measured;
  out["edges_claimed"] = c.edges_claimed;
  out["edge_count_ok"] = c.edge_count_ok;
  out["kkt_free"] = c.kkt_free;
  out["witness"] = witness_json(c.witness);
  out["spanning_ok"] = c.spanning_ok;
  out["passed"] = c.passed();
  return out;
}

ordered_json construct_json(const Construction& c, const Certificate& cert,
                            const std::optional<std::string>& out_path) {
  const auto& p = c.spec.params;
  ordered_json out;
  out["command"] = "construct";
  out["sizes"] = sizes_json(p.ns);
  out["t"] = p.t;
  out["k"] = p.k;
  out["v0_size"] = c.spec.v0_size;
  out["witness_partition"] = partition_json(c.spec.witness_partition);
  out["vertices"] = c.graph.vertex_count();
  out["edges"] = c.graph.edge_count();
  out["formula_value"] = conjecture_value(p.ns, p.t, p.k).value;
  out["certificate"] = certificate_json(cert);
  out["out"] = out_path ? ordered_json(*out_path) : ordered_json(nullptr);
  return out;
}

ordered_json check_free_json(const MultipartiteGraph& g, int t, int k, const std::string& source) {
  const auto witness = find_disjoint_cliques(g, t, k);
  ordered_json out;
  out["command"] = "check-free";
  out["in"] = source;
  out["t"] = t;
  out["k"] = k;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["free"] = !witness.has_value();
  out["witness"] = witness_json(witness);
  return out;
}

ordered_json oracle_json(const SizeMultiset& ns, int t, int k, const OracleResult& r) {
  ordered_json out;
  out["command"] = "oracle";
  out["sizes"] = sizes_json(ns);
  out["t"] = t;
  out["k"] = k;
  const ordered_json summary = oracle_summary_json(r);
  for (const auto& [key, value] : summary.items()) out[key] = value;
  auto example = ordered_json::array();
  for (const Edge& e : r.extremal_example) example.push_back({e.u, e.v});
  out["extremal_example"] = std::move(example);
  return out;
}

ordered_json report_json(const ExtremalReport& r, const char* command) {
  ordered_json out;
  out["command"] = command;
  out["sizes"] = sizes_json(r.params.ns);
  out["r"] = r.params.ns.size();
  out["t"] = r.params.t;
  out["k"] = r.params.k;
  ordered_json formulas;
  for (const auto& [id, value] : r.formulas) {
    formulas[std::string(formula_tag(id))] =
        value ? formula_value_json(*value) : ordered_json(nullptr);
  }
  out["formulas"] = std::move(formulas);
  if (r.construction_edges) {
    ordered_json c;
    c["edges"] = *r.construction_edges;
    c["certified"] = r.construction_certified.value_or(false);
    out["construction"] = std::move(c);
  } else {
    out["construction"] = nullptr;
  }
  out["oracle"] = r.oracle ? oracle_summary_json(*r.oracle) : ordered_json(nullptr);
  out["verdict"] = verdict_name(r.verdict);
  auto mismatches = ordered_json::array();
  for (const auto& m : r.mismatches) {
    ordered_json e;
    e["source"] = m.source;
    e["value"] = m.value;
    e["in_proved_range"] = m.in_proved_range;
    mismatches.push_back(std::move(e));
  }
  out["mismatches"] = std::move(mismatches);
  auto readings = ordered_json::array();
  if (r.potential_counterexample()) {
    readings.push_back("potential counterexample: the n_1 >= k threshold of the conjectured "
                       "formula may not be tight at these sizes");
    readings.push_back("small-size degeneracy: the instance lies outside the sufficiently-large "
                       "regime the conjectured formulas assume");
  }
  out["readings"] = std::move(readings);
  return out;
}

ordered_json props_json(const PropsOptions& opt, const PropsReport& r) {
  ordered_json out;
  out["command"] = "props";
  out["which"] = r.which;
  out["size_max"] = opt.size_max;
  out["r_max"] = opt.r_max;
  out["k_max"] = opt.k_max;
  out["checked"] = r.checked;
  out["violations"] = r.violations;
  out["skipped"] = r.skipped;
  out["sharper_form_failures"] =
      r.sharper_form_failures ? ordered_json(*r.sharper_form_failures) : ordered_json(nullptr);
  out["examples"] = r.examples;
  out["sharper_form_examples"] = r.sharper_form_examples;
  return out;
}

}  // namespace mpex
