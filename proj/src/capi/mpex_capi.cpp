#include "mpex/mpex.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "core/construct.hpp"
#include "core/oracle.hpp"
#include "core/partition_opt.hpp"
#include "core/report.hpp"
#include "core/turan_formulas.hpp"

struct mpex_graph {
  mpex::MultipartiteGraph graph;
};

namespace {

thread_local std::string g_last_error;

mpex_status to_status(mpex::ErrorCode code) noexcept {
  using mpex::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return MPEX_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidArity: return MPEX_ERR_INVALID_ARITY;
    case ErrorCode::InvalidSize: return MPEX_ERR_INVALID_SIZE;
    case ErrorCode::OutOfRange: return MPEX_ERR_OUT_OF_RANGE;
    case ErrorCode::NotAnEdge: return MPEX_ERR_NOT_AN_EDGE;
    case ErrorCode::BudgetExceeded: return MPEX_ERR_BUDGET_EXCEEDED;
    case ErrorCode::Overflow: return MPEX_ERR_OVERFLOW;
    case ErrorCode::Parse: return MPEX_ERR_PARSE;
    case ErrorCode::Io: return MPEX_ERR_IO;
  }
  return MPEX_ERR_INTERNAL;
}

template <class F>
mpex_status guarded(F&& body) noexcept {
  try {
    g_last_error.clear();
    return body();
  } catch (const mpex::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MPEX_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MPEX_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw mpex::Error(mpex::ErrorCode::InvalidArgument, what);
}

mpex::SizeMultiset sizes_of(const int64_t* sizes, size_t r) {
  require(sizes != nullptr || r == 0, "sizes pointer is null");
  return mpex::SizeMultiset(std::vector<mpex::Int>(sizes, sizes + r));
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mpex::OracleBudget budget_of(uint64_t nodes, double secs) {
  mpex::OracleBudget b;
  if (nodes > 0) b.max_nodes = nodes;
  if (secs > 0) b.max_seconds = secs;
  return b;
}

void fill_labels(const mpex::FtResult& r, size_t count, int32_t* block_of) {
  if (!block_of) return;
  if (!r.witness) {
    std::fill(block_of, block_of + count, 0);
    return;
  }
  const auto labels = r.witness->labels();
  std::copy(labels.begin(), labels.end(), block_of);
}

void fill_formula(const mpex::FormulaValue& v, mpex_formula_value* out) {
  out->value = v.value;
  out->id = static_cast<mpex_formula_id>(v.id);
  out->in_proved_range = v.in_proved_range ? 1 : 0;
  std::snprintf(out->range_note, sizeof out->range_note, "%s", v.range_note.c_str());
}

mpex_graph* wrap(mpex::MultipartiteGraph g) { return new mpex_graph{std::move(g)}; }

}  // namespace

extern "C" {

const char* mpex_version(void) { return MPEX_VERSION_STRING; }

const char* mpex_status_name(mpex_status status) {
  switch (status) {
    case MPEX_OK: return "OK";
    case MPEX_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case MPEX_ERR_INVALID_ARITY: return "InvalidArity";
    case MPEX_ERR_INVALID_SIZE: return "InvalidSize";
    case MPEX_ERR_OUT_OF_RANGE: return "OutOfRange";
    case MPEX_ERR_NOT_AN_EDGE: return "NotAnEdge";
    case MPEX_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case MPEX_ERR_OVERFLOW: return "Overflow";
    case MPEX_ERR_PARSE: return "Parse";
    case MPEX_ERR_IO: return "Io";
    case MPEX_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* mpex_last_error(void) { return g_last_error.c_str(); }

void mpex_string_free(char* s) { std::free(s); }

mpex_status mpex_ft(const int64_t* sizes, size_t r, int32_t t, int64_t* value, int32_t* block_of) {
  return guarded([&] {
    require(value != nullptr, "value pointer is null");
    const auto result = mpex::f_value(sizes_of(sizes, r), t);
    *value = result.value;
    fill_labels(result, r, block_of);
    return MPEX_OK;
  });
}

mpex_status mpex_ft_exhaustive(const int64_t* sizes, size_t r, int32_t t, int64_t* value,
                               int32_t* block_of) {
  return guarded([&] {
    require(value != nullptr, "value pointer is null");
    const auto result = mpex::f_general(sizes_of(sizes, r), t);
    *value = result.value;
    fill_labels(result, r, block_of);
    return MPEX_OK;
  });
}

mpex_status mpex_f3_fast(const int64_t* sizes, size_t r, int64_t* value, int32_t* block_of) {
  return guarded([&] {
    require(value != nullptr, "value pointer is null");
    const auto result = mpex::f3_fast(sizes_of(sizes, r));
    *value = result.value;
    fill_labels(result, r, block_of);
    return MPEX_OK;
  });
}

mpex_status mpex_f_closed_equal_r(const int64_t* sizes, size_t r, int64_t* value) {
  return guarded([&] {
    require(value != nullptr, "value pointer is null");
    *value = mpex::f_closed_equal_r(sizes_of(sizes, r));
    return MPEX_OK;
  });
}

mpex_status mpex_formula(mpex_formula_id id, const int64_t* sizes, size_t r, int32_t t,
                         int32_t k, mpex_formula_value* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    require(id >= MPEX_FORMULA_THM11 && id <= MPEX_FORMULA_ERDOS, "unknown formula id");
    const mpex::HostParams params(sizes_of(sizes, r), t, k);
    fill_formula(mpex::evaluate_formula(static_cast<mpex::FormulaId>(id), params), out);
    return MPEX_OK;
  });
}

mpex_status mpex_formula_from_tag(const char* tag, mpex_formula_id* out) {
  return guarded([&] {
    require(tag != nullptr && out != nullptr, "null argument");
    const auto id = mpex::formula_from_tag(tag);
    if (!id) {
      throw mpex::Error(mpex::ErrorCode::InvalidArgument,
                        std::string("unknown formula '") + tag + "'");
    }
    *out = static_cast<mpex_formula_id>(*id);
    return MPEX_OK;
  });
}

const char* mpex_formula_tag(mpex_formula_id id) {
  if (id < MPEX_FORMULA_THM11 || id > MPEX_FORMULA_ERDOS) return "unknown";
  return mpex::formula_tag(static_cast<mpex::FormulaId>(id)).data();
}

mpex_status mpex_ex_kK3_complete(int64_t n, int32_t k, mpex_formula_value* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    fill_formula(mpex::ex_kK3_complete(n, k), out);
    return MPEX_OK;
  });
}

mpex_status mpex_graph_complete(const int64_t* sizes, size_t r, mpex_graph** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = wrap(mpex::MultipartiteGraph::complete(sizes_of(sizes, r)));
    return MPEX_OK;
  });
}

mpex_status mpex_graph_lower_bound(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                                   mpex_graph** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = wrap(mpex::build_lower_bound_graph(sizes_of(sizes, r), t, k).graph);
    return MPEX_OK;
  });
}

mpex_status mpex_graph_erdos(int64_t n, int32_t k, mpex_graph** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = wrap(mpex::build_erdos_graph(n, k));
    return MPEX_OK;
  });
}

mpex_status mpex_graph_parse(const char* text, size_t length, mpex_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = wrap(mpex::parse_edge_list(std::string_view(text, length)));
    return MPEX_OK;
  });
}

mpex_status mpex_graph_read_file(const char* path, mpex_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = wrap(mpex::read_edge_list_file(path));
    return MPEX_OK;
  });
}

mpex_status mpex_graph_write_file(const mpex_graph* g, const char* path) {
  return guarded([&] {
    require(g != nullptr && path != nullptr, "null argument");
    mpex::write_edge_list_file(g->graph, path);
    return MPEX_OK;
  });
}

mpex_status mpex_graph_to_text(const mpex_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = dup_string(mpex::write_edge_list(g->graph));
    return MPEX_OK;
  });
}

void mpex_graph_free(mpex_graph* g) { delete g; }

size_t mpex_graph_vertex_count(const mpex_graph* g) {
  return g ? static_cast<size_t>(g->graph.vertex_count()) : 0;
}

size_t mpex_graph_edge_count(const mpex_graph* g) { return g ? g->graph.edge_count() : 0; }

size_t mpex_graph_part_count(const mpex_graph* g) {
  return g ? static_cast<size_t>(g->graph.part_count()) : 0;
}

int32_t mpex_graph_adjacent(const mpex_graph* g, int32_t u, int32_t v) {
  if (!g) return 0;
  const int n = g->graph.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) return 0;
  return g->graph.adjacent(u, v) ? 1 : 0;
}

mpex_status mpex_graph_remove_edges(const mpex_graph* g, const int32_t* pairs, size_t count,
                                    mpex_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    require(pairs != nullptr || count == 0, "pairs pointer is null");
    std::vector<mpex::Edge> edges;
    edges.reserve(count);
    for (size_t i = 0; i < count; ++i) edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = wrap(g->graph.remove_edges(edges));
    return MPEX_OK;
  });
}

mpex_status mpex_graph_for_each_clique(const mpex_graph* g, int32_t t,
                                       mpex_clique_callback callback, void* user) {
  return guarded([&] {
    require(g != nullptr && callback != nullptr, "null argument");
    std::vector<int32_t> buffer;
    mpex::for_each_clique(g->graph, t, [&](std::span<const int> c) {
      buffer.assign(c.begin(), c.end());
      return callback(buffer.data(), buffer.size(), user) != 0;
    });
    return MPEX_OK;
  });
}

mpex_status mpex_graph_find_packing(const mpex_graph* g, int32_t t, int32_t k, int32_t* found,
                                    int32_t* vertices) {
  return guarded([&] {
    require(g != nullptr && found != nullptr, "null argument");
    const auto witness = mpex::find_disjoint_cliques(g->graph, t, k);
    *found = witness ? 1 : 0;
    if (witness && vertices) {
      size_t i = 0;
      for (const auto& c : witness->cliques) {
        for (int v : c) vertices[i++] = v;
      }
    }
    return MPEX_OK;
  });
}

mpex_status mpex_graph_max_packing(const mpex_graph* g, int32_t t, int32_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = mpex::max_packing_size(g->graph, t);
    return MPEX_OK;
  });
}

mpex_status mpex_oracle(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                        uint64_t budget_nodes, double budget_secs, mpex_oracle_result* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const auto result =
        mpex::brute_force_ex(sizes_of(sizes, r), t, k, budget_of(budget_nodes, budget_secs));
    out->host_edges = result.host_edges;
    out->exact = result.value ? 1 : 0;
    out->value = result.value.value_or(result.value_lower);
    out->value_lower = result.value_lower;
    out->value_upper = result.value_upper;
    out->nodes_explored = result.nodes_explored;
    if (result.timed_out) {
      g_last_error = "oracle budget exhausted";
      return MPEX_ERR_BUDGET_EXCEEDED;
    }
    return MPEX_OK;
  });
}

mpex_status mpex_ft_json(const int64_t* sizes, size_t r, int32_t t, int32_t with_witness,
                         char** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = dup_string(mpex::ft_json(sizes_of(sizes, r), t, with_witness != 0).dump());
    return MPEX_OK;
  });
}

mpex_status mpex_formula_json(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                              const char* tag, char** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    std::optional<mpex::FormulaId> which;
    if (tag) {
      which = mpex::formula_from_tag(tag);
      if (!which) {
        throw mpex::Error(mpex::ErrorCode::InvalidArgument,
                          std::string("unknown formula '") + tag + "'");
      }
    }
    const mpex::HostParams params(sizes_of(sizes, r), t, k);
    *out = dup_string(mpex::formula_json(params, which).dump());
    return MPEX_OK;
  });
}

mpex_status mpex_construct_json(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                                const char* out_path, char** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const auto ns = sizes_of(sizes, r);
    const auto built = mpex::build_lower_bound_graph(ns, t, k);
    const auto cert =
        mpex::certify(built.graph, t, k, mpex::conjecture_value(ns, t, k).value);
    std::optional<std::string> path;
    if (out_path) {
      path = out_path;
      mpex::write_edge_list_file(built.graph, *path);
    }
    *out = dup_string(mpex::construct_json(built, cert, path).dump());
    return MPEX_OK;
  });
}

mpex_status mpex_certify_json(const mpex_graph* g, int32_t t, int32_t k, int64_t claimed_edges,
                              char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = dup_string(mpex::certificate_json(mpex::certify(g->graph, t, k, claimed_edges)).dump());
    return MPEX_OK;
  });
}

mpex_status mpex_check_free_json(const char* path, int32_t t, int32_t k, char** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    const auto g = mpex::read_edge_list_file(path);
    *out = dup_string(mpex::check_free_json(g, t, k, path).dump());
    return MPEX_OK;
  });
}

mpex_status mpex_oracle_json(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                             uint64_t budget_nodes, double budget_secs, char** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const auto ns = sizes_of(sizes, r);
    const auto result = mpex::brute_force_ex(ns, t, k, budget_of(budget_nodes, budget_secs));
    *out = dup_string(mpex::oracle_json(ns, t, k, result).dump());
    if (result.timed_out) {
      g_last_error = "oracle budget exhausted";
      return MPEX_ERR_BUDGET_EXCEEDED;
    }
    return MPEX_OK;
  });
}

mpex_status mpex_verify_json(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                             uint64_t budget_nodes, double budget_secs, char** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const auto ns = sizes_of(sizes, r);
    if (ns.pair_product_sum() > mpex::kMaxOracleEdges) {
      throw mpex::Error(mpex::ErrorCode::OutOfRange,
                        "verify runs the oracle, which is limited to " +
                            std::to_string(mpex::kMaxOracleEdges) + " host edges");
    }
    const auto report =
        mpex::verify_instance(ns, t, k, true, budget_of(budget_nodes, budget_secs));
    *out = dup_string(mpex::report_json(report, "verify").dump());
    if (report.verdict == mpex::Verdict::Inconclusive) {
      g_last_error = "oracle budget exhausted";
      return MPEX_ERR_BUDGET_EXCEEDED;
    }
    return MPEX_OK;
  });
}

mpex_status mpex_sweep(int32_t r, int32_t t, int32_t k_max, int64_t size_max, int32_t with_oracle,
                       uint64_t budget_nodes, double budget_secs, mpex_line_callback emit,
                       void* user, mpex_sweep_summary* out) {
  return guarded([&] {
    require(emit != nullptr, "emit callback is null");
    mpex::SweepOptions opt;
    opt.r = r;
    opt.t = t;
    opt.k_max = k_max;
    opt.size_max = size_max;
    opt.oracle = with_oracle != 0;
    opt.budget = budget_of(budget_nodes, budget_secs);
    const auto summary =
        mpex::run_sweep(opt, [&](const std::string& line) { emit(line.c_str(), user); });
    if (out) {
      out->instances = summary.instances;
      out->proved_mismatches = summary.proved_mismatches;
      out->potential_counterexamples = summary.potential_counterexamples;
      out->inconclusive = summary.inconclusive;
    }
    return MPEX_OK;
  });
}

mpex_status mpex_props_json(const char* which, int64_t size_max, int32_t r_max, int32_t k_max,
                            char** out) {
  return guarded([&] {
    require(which != nullptr && out != nullptr, "null argument");
    mpex::PropsOptions opt;
    opt.which = which;
    opt.size_max = size_max;
    opt.r_max = r_max;
    opt.k_max = k_max;
    *out = dup_string(mpex::props_json(opt, mpex::run_props(opt)).dump());
    return MPEX_OK;
  });
}

}  // extern "C"
