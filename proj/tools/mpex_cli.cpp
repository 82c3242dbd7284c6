// Command-line front end. Links only the C API of libmpex.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpex/mpex.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct LibraryError {
  mpex_status status;
  std::string message;
};

void check(mpex_status s) {
  if (s != MPEX_OK) throw LibraryError{s, mpex_last_error()};
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { mpex_string_free(ptr); }
  ordered_json parse() const { return ordered_json::parse(ptr); }
};

std::string join(const ordered_json& values, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    first = false;
    os << v.dump();
  }
  return os.str();
}

std::string blocks_text(const ordered_json& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += ' ';
    out += '{' + join(b) + '}';
  }
  return out;
}


struct Common {
  std::vector<int64_t> sizes;
  int t = 3;
  int k = 1;
  uint64_t budget_nodes = 10'000'000;
  double budget_secs = 60.0;
};

void print_report_human(const ordered_json& j) {
  std::cout << "instance   sizes=(" << join(j["sizes"]) << ") t=" << j["t"] << " k=" << j["k"]
            << '\n';
  for (const auto& [tag, f] : j["formulas"].items()) {
    if (f.is_null()) continue;
    std::cout << "formula    " << tag << " = " << f["value"]
              << (f["in_proved_range"].get<bool>() ? "  [proved]  " : "  [unproved]  ")
              << f["range_note"].get<std::string>() << '\n';
  }
  if (!j["construction"].is_null()) {
    std::cout << "construct  edges=" << j["construction"]["edges"]
              << " certified=" << j["construction"]["certified"] << '\n';
  }
  if (!j["oracle"].is_null()) {
    const auto& o = j["oracle"];
    if (o["exact"].get<bool>()) {
      std::cout << "oracle     ex=" << o["value"] << " deletions=" << o["deletions"]
                << " nodes=" << o["nodes_explored"] << '\n';
    } else {
      std::cout << "oracle     budget exhausted: " << o["value_lower"] << " <= ex <= "
                << o["value_upper"] << '\n';
    }
  }
  std::cout << "verdict    " << j["verdict"].get<std::string>() << '\n';
  for (const auto& m : j["mismatches"]) {
    std::cout << "mismatch   " << m["source"].get<std::string>() << " = " << m["value"]
              << (m["in_proved_range"].get<bool>() ? " (proved range)" : " (conjectured)")
              << '\n';
  }
  for (const auto& reading : j["readings"]) {
    std::cout << "reading    " << reading.get<std::string>() << '\n';
  }
}

void emit_line(const char* line, void* user) {
  auto* out = static_cast<std::ostream*>(user);
  *out << line << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal numbers ex(K_{n_1..n_r}, kK_t) for complete multipartite hosts"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print JSON for every command");
  app.set_version_flag("--version", std::string(mpex_version()));

  Common c;
  auto add_sizes = [&](CLI::App* sub) {
    sub->add_option("--sizes", c.sizes, "Part sizes, comma separated")
        ->required()
        ->delimiter(',');
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", c.budget_nodes, "Oracle node budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-secs", c.budget_secs, "Oracle time budget in seconds")
        ->check(CLI::PositiveNumber);
  };

  auto* ft = app.add_subcommand("ft", "Evaluate the partition function f_t");
  add_sizes(ft);
  ft->add_option("--t", c.t, "Clique order t")->required();
  bool witness = false;
  ft->add_flag("--witness", witness, "Also print a maximizing partition");

  auto* formula = app.add_subcommand("formula", "Evaluate closed-form extremal numbers");
  add_sizes(formula);
  formula->add_option("--t", c.t)->required();
  formula->add_option("--k", c.k)->required();
  std::string which_formula;
  formula->add_option("--which", which_formula, "One formula only")
      ->check(CLI::IsMember({"thm11", "thm12", "thm13", "thm16", "conj15", "conj16", "kk2",
                             "erdos"}));

  auto* construct = app.add_subcommand("construct", "Build and certify the lower-bound graph");
  add_sizes(construct);
  construct->add_option("--t", c.t)->required();
  construct->add_option("--k", c.k)->required();
  std::string out_file;
  construct->add_option("--out", out_file, "Write the edge list here");

  auto* check_free = app.add_subcommand("check-free", "Decide whether a graph contains kK_t");
  std::string in_file;
  check_free->add_option("--in", in_file, "Edge-list file")->required();
  check_free->add_option("--t", c.t)->required();
  check_free->add_option("--k", c.k)->required();

  auto* oracle = app.add_subcommand("oracle", "Exact ex by brute-force search");
  add_sizes(oracle);
  oracle->add_option("--t", c.t)->required();
  oracle->add_option("--k", c.k)->required();
  add_budget(oracle);

  auto* verify = app.add_subcommand("verify", "Compare oracle, formulas and construction");
  add_sizes(verify);
  verify->add_option("--t", c.t)->required();
  verify->add_option("--k", c.k)->required();
  add_budget(verify);

  auto* sweep = app.add_subcommand("sweep", "Verify every ascending tuple (JSON lines)");
  int sweep_r = 0;
  int k_max = 1;
  int64_t size_max = 1;
  bool with_oracle = false;
  sweep->add_option("--r", sweep_r, "Number of parts")->required();
  sweep->add_option("--t", c.t)->required();
  sweep->add_option("--k-max", k_max)->required();
  sweep->add_option("--size-max", size_max)->required();
  sweep->add_flag("--oracle", with_oracle, "Run the exact oracle on each instance");
  add_budget(sweep);

  auto* props = app.add_subcommand("props", "Run the f_3 and formula-equivalence sweeps");
  std::string which_prop;
  int r_max = 6;
  int props_k_max = 4;
  props->add_option("--which", which_prop)->required()->check(CLI::IsMember({"2.1", "2.2", "2.3"}));
  props->add_option("--size-max", size_max)->required();
  props->add_option("--r-max", r_max)->required();
  props->add_option("--k-max", props_k_max, "Largest k for 2.1 (default 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const int64_t* sizes = c.sizes.data();
  const size_t r = c.sizes.size();
  try {
    if (ft->parsed()) {
      OwnedString s;
      check(mpex_ft_json(sizes, r, c.t, witness ? 1 : 0, &s.ptr));
      const auto j = s.parse();
      if (json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << j["value"] << '\n';
        if (witness && !j["witness"].is_null()) {
          std::cout << "witness " << blocks_text(j["witness"]) << "  sums "
                    << join(j["block_sums"]) << '\n';
        }
      }
      return kExitOk;
    }

    if (formula->parsed()) {
      OwnedString s;
      check(mpex_formula_json(sizes, r, c.t, c.k,
                              which_formula.empty() ? nullptr : which_formula.c_str(), &s.ptr));
      const auto j = s.parse();
      if (json) {
        std::cout << j.dump() << '\n';
      } else {
        for (const auto& f : j["results"]) {
          std::cout << f["formula"].get<std::string>() << '\t';
          if (f["value"].is_null()) {
            std::cout << "n/a\t" << f["error"].get<std::string>() << '\n';
          } else {
            std::cout << f["value"] << '\t'
                      << (f["in_proved_range"].get<bool>() ? "proved" : "unproved") << '\t'
                      << f["range_note"].get<std::string>() << '\n';
          }
        }
      }
      return kExitOk;
    }

    if (construct->parsed()) {
      OwnedString s;
      check(mpex_construct_json(sizes, r, c.t, c.k, out_file.empty() ? nullptr : out_file.c_str(),
                                &s.ptr));
      const auto j = s.parse();
      const auto& cert = j["certificate"];
      if (json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "partition  " << blocks_text(j["witness_partition"]) << '\n'
                  << "v0_size    " << j["v0_size"] << '\n'
                  << "vertices   " << j["vertices"] << '\n'
                  << "edges      " << j["edges"] << " (formula " << j["formula_value"] << ")\n"
                  << "kKt_free   " << cert["kkt_free"] << '\n'
                  << "spanning   " << cert["spanning_ok"] << '\n'
                  << "certified  " << cert["passed"] << '\n';
        if (!out_file.empty()) std::cout << "written    " << out_file << '\n';
      }
      return cert["passed"].get<bool>() ? kExitOk : kExitFailure;
    }

    if (check_free->parsed()) {
      OwnedString s;
      check(mpex_check_free_json(in_file.c_str(), c.t, c.k, &s.ptr));
      const auto j = s.parse();
      if (json) {
        std::cout << j.dump() << '\n';
      } else if (j["free"].get<bool>()) {
        std::cout << "FREE\n";
      } else {
        std::cout << "WITNESS " << blocks_text(j["witness"]) << '\n';
      }
      return kExitOk;
    }

    if (oracle->parsed()) {
      OwnedString s;
      const auto status =
          mpex_oracle_json(sizes, r, c.t, c.k, c.budget_nodes, c.budget_secs, &s.ptr);
      if (status != MPEX_ERR_BUDGET_EXCEEDED) check(status);
      const auto j = s.parse();
      if (json) {
        std::cout << j.dump() << '\n';
      } else if (j["exact"].get<bool>()) {
        std::cout << "ex = " << j["value"] << " (host edges " << j["host_edges"]
                  << ", deletions " << j["deletions"] << ", nodes " << j["nodes_explored"]
                  << ")\n";
      } else {
        std::cout << "budget exhausted: " << j["value_lower"] << " <= ex <= "
                  << j["value_upper"] << '\n';
      }
      return status == MPEX_ERR_BUDGET_EXCEEDED ? kExitBudget : kExitOk;
    }

    if (verify->parsed()) {
      OwnedString s;
      const auto status =
          mpex_verify_json(sizes, r, c.t, c.k, c.budget_nodes, c.budget_secs, &s.ptr);
      if (status != MPEX_ERR_BUDGET_EXCEEDED) check(status);
      const auto j = s.parse();
      if (json) {
        std::cout << j.dump() << '\n';
      } else {
        print_report_human(j);
      }
      for (const auto& m : j["mismatches"]) {
        if (m["in_proved_range"].get<bool>()) return kExitFailure;
      }
      return status == MPEX_ERR_BUDGET_EXCEEDED ? kExitBudget : kExitOk;
    }

    if (sweep->parsed()) {
      mpex_sweep_summary summary{};
      check(mpex_sweep(sweep_r, c.t, k_max, size_max, with_oracle ? 1 : 0, c.budget_nodes,
                       c.budget_secs, emit_line, &std::cout, &summary));
      std::cerr << "instances " << summary.instances << ", proved mismatches "
                << summary.proved_mismatches << ", potential counterexamples "
                << summary.potential_counterexamples << ", inconclusive "
                << summary.inconclusive << '\n';
      if (summary.proved_mismatches > 0) return kExitFailure;
      return summary.inconclusive > 0 ? kExitBudget : kExitOk;
    }

    if (props->parsed()) {
      OwnedString s;
      check(mpex_props_json(which_prop.c_str(), size_max, r_max, props_k_max, &s.ptr));
      const auto j = s.parse();
      if (json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "props " << which_prop << ": checked " << j["checked"]
                  << ", violations " << j["violations"] << ", skipped " << j["skipped"];
        if (!j["sharper_form_failures"].is_null()) {
          std::cout << ", sharper-form failures " << j["sharper_form_failures"];
        }
        std::cout << '\n';
        for (const auto& ex : j["examples"]) std::cout << "violation " << ex.dump() << '\n';
      }
      return j["violations"].get<uint64_t>() > 0 ? kExitFailure : kExitOk;
    }
  } catch (const LibraryError& e) {
    std::cerr << "error: " << mpex_status_name(e.status) << ": " << e.message << '\n';
    if (e.status == MPEX_ERR_BUDGET_EXCEEDED) return kExitBudget;
    if (e.status == MPEX_ERR_INTERNAL) return kExitFailure;
    return kExitUsage;
  }
  return kExitUsage;
}
