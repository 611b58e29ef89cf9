// Command-line front end for Kendall-tau permutation code analysis.
// Subcommands wrap the library; no numeric logic lives here.

#include "ktc/bounds.hpp"
#include "ktc/code.hpp"
#include "ktc/perm.hpp"
#include "ktc/puncture.hpp"
#include "ktc/reproduce.hpp"
#include "ktc/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  std::string format = "text";
  ktc::SearchBudget budget;
  bool strict_determinism = true;  // accepted for script compatibility; search is sequential
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--budget-nodes", opts.budget.max_nodes, "Search node budget");
  cmd->add_option("--budget-seconds", opts.budget.max_seconds, "Search time budget (0 = none)");
  cmd->add_flag("--strict-determinism,!--no-strict-determinism", opts.strict_determinism,
                "Deterministic search order (always on)");
}

// Largest t whose forced-distance threshold C(t,2) is still below d.
int averaging_t_for_distance(int n, long long d) {
  int best = 1;
  for (int t = 1; t <= n; ++t)
    if (ktc::choose2(t) < d) best = t;
  return best;
}

json bounds_row_d(int n, long long d) {
  const int t = averaging_t_for_distance(n, d);
  json row;
  row["n"] = n;
  row["d"] = d;
  row["sphere_packing"] = ktc::sphere_packing_bound(n, d).str();
  row["gv"] = ktc::gv_guarantee(n, d).str();
  row["singleton_case"] =
      "any code with |C| = n!/" + std::to_string(t) + "! has d <= " + std::to_string(ktc::choose2(t) + 1);
  row["averaging"] = ktc::averaging_bound(n, t).str();
  return row;
}

json bounds_row_t(int n, int t) {
  const long long d = ktc::choose2(t) + 1;
  json row;
  row["n"] = n;
  row["t"] = t;
  row["d"] = d;
  if (d <= ktc::choose2(n)) {
    row["sphere_packing"] = ktc::sphere_packing_bound(n, d).str();
    row["gv"] = ktc::gv_guarantee(n, d).str();
  } else {
    row["sphere_packing"] = nullptr;
    row["gv"] = nullptr;
  }
  row["singleton_case"] = "|C| = n!/t! implies d <= " + std::to_string(d);
  row["averaging"] = ktc::averaging_bound(n, t).str();
  const auto cb = ktc::cube_vs_ball(n, t);
  row["cube"] = cb.cube.str();
  row["ball_radius_floor"] = cb.radius_floor;
  row["ball_at_floor"] = cb.ball_at_floor.str();
  row["ball_at_ceil"] = cb.ball_at_ceil.str();
  row["cube_vs_ball"] = cb.verdict > 0 ? "cube" : cb.verdict < 0 ? "ball" : "equal";
  return row;
}

void print_table(const json& rows, std::ostream& out) {
  if (rows.empty()) return;
  std::vector<std::string> cols;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) cols.push_back(it.key());
  std::vector<size_t> widths;
  for (const auto& c : cols) widths.push_back(c.size());
  auto cell = [](const json& v) {
    if (v.is_null()) return std::string("-");
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  for (const auto& row : rows)
    for (size_t i = 0; i < cols.size(); ++i)
      widths[i] = std::max(widths[i], cell(row.at(cols[i])).size());
  for (size_t i = 0; i < cols.size(); ++i)
    out << std::left << std::setw(static_cast<int>(widths[i]) + 2) << cols[i];
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < cols.size(); ++i)
      out << std::left << std::setw(static_cast<int>(widths[i]) + 2) << cell(row.at(cols[i]));
    out << '\n';
  }
}

json outcome_json(const ktc::SearchOutcome& o, int n) {
  json j;
  j["status"] = o.status == ktc::SearchStatus::exact ? "exact" : "budget_exhausted";
  j["size"] = o.best_code.size();
  j["nodes"] = o.nodes;
  if (!o.certificate.empty()) j["certificate"] = o.certificate;
  std::ostringstream code;
  code << "n=" << n << '\n';
  for (const auto& w : o.best_code) code << w.str() << '\n';
  j["code"] = code.str();
  return j;
}

void write_code_file(const std::string& path, int n, const std::vector<ktc::Permutation>& words) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << "n=" << n << '\n';
  for (const auto& w : words) out << w.str() << '\n';
}

std::string status_name(ktc::ClaimStatus s) {
  switch (s) {
    case ktc::ClaimStatus::pass: return "pass";
    case ktc::ClaimStatus::fail: return "fail";
    default: return "skipped";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of permutation codes under the Kendall-tau metric"};
  app.require_subcommand(1);

  // distance
  std::string perm_a, perm_b;
  auto* cmd_distance = app.add_subcommand("distance", "Kendall-tau distance between two permutations");
  cmd_distance->add_option("a", perm_a, "First permutation, e.g. \"2 3 1\"")->required();
  cmd_distance->add_option("b", perm_b, "Second permutation")->required();

  // weight
  std::string perm_w;
  auto* cmd_weight = app.add_subcommand("weight", "Number of inversions of a permutation");
  cmd_weight->add_option("a", perm_w, "Permutation")->required();

  // puncture
  std::string perm_p, keep_text;
  auto* cmd_puncture = app.add_subcommand("puncture", "Restrict a permutation to a set of positions");
  cmd_puncture->add_option("a", perm_p, "Permutation")->required();
  cmd_puncture->add_option("-s,--keep", keep_text, "Kept positions, e.g. \"3,5,6\"")->required();

  // ball-size
  int bs_n = 0;
  long long bs_r = 0;
  auto* cmd_ball = app.add_subcommand("ball-size", "Cardinality of the radius-r ball");
  cmd_ball->add_option("-n", bs_n, "Degree")->required();
  cmd_ball->add_option("-r", bs_r, "Radius")->required();

  // bounds
  int b_n = 0, b_nmax = 0, b_t = 0, b_tmax = 0;
  long long b_d = 0, b_dmax = 0;
  CommonOpts b_opts;
  auto* cmd_bounds = app.add_subcommand("bounds", "Cardinality bound table over (n,d) or (n,t)");
  cmd_bounds->add_option("-n", b_n, "Degree (or range start)")->required();
  cmd_bounds->add_option("--n-max", b_nmax, "Degree range end");
  cmd_bounds->add_option("-d", b_d, "Minimum distance (or range start)");
  cmd_bounds->add_option("--d-max", b_dmax, "Distance range end");
  cmd_bounds->add_option("-t", b_t, "Balance parameter (or range start)");
  cmd_bounds->add_option("--t-max", b_tmax, "Balance parameter range end");
  add_common(cmd_bounds, b_opts);

  // verify
  std::string v_file;
  int v_t = 0;
  bool v_structure = false;
  CommonOpts v_opts;
  auto* cmd_verify = app.add_subcommand("verify", "Check a code file for t-balancedness");
  cmd_verify->add_option("file", v_file, "Code file (header n=<degree>, one word per line)")->required();
  cmd_verify->add_option("-t", v_t, "Balance parameter")->required();
  cmd_verify->add_flag("--structure", v_structure, "Also run fiber and window structure checks");
  add_common(cmd_verify, v_opts);

  // search
  auto* cmd_search = app.add_subcommand("search", "Code construction and exact search");
  cmd_search->require_subcommand(1);
  int sg_n = 0, sm_n = 0;
  long long sg_d = 0, sm_d = 0;
  std::string sg_out, sm_out;
  CommonOpts sg_opts, sm_opts;
  auto* cmd_gv = cmd_search->add_subcommand("gv", "Greedy sweep achieving the ball-quotient guarantee");
  cmd_gv->add_option("-n", sg_n, "Degree")->required();
  cmd_gv->add_option("-d", sg_d, "Minimum distance")->required();
  cmd_gv->add_option("-o,--out", sg_out, "Write the code to a file");
  add_common(cmd_gv, sg_opts);
  auto* cmd_max = cmd_search->add_subcommand("max-code", "Exact maximum code via branch-and-bound");
  cmd_max->add_option("-n", sm_n, "Degree (<= 6)")->required();
  cmd_max->add_option("-d", sm_d, "Minimum distance")->required();
  cmd_max->add_option("-o,--out", sm_out, "Write the best code to a file");
  add_common(cmd_max, sm_opts);

  // classify
  int cl_n = 0;
  CommonOpts cl_opts;
  auto* cmd_classify = app.add_subcommand("classify", "Enumerate all 2-balanced codes (n = 3 or 4)");
  cmd_classify->add_option("-n", cl_n, "Degree")->required();
  add_common(cmd_classify, cl_opts);

  // refute
  int rf_n = 0, rf_t = 0;
  CommonOpts rf_opts;
  auto* cmd_refute = app.add_subcommand("refute", "Exhaustive nonexistence search for t-balanced codes");
  cmd_refute->add_option("-n", rf_n, "Degree (<= 6)")->required();
  cmd_refute->add_option("-t", rf_t, "Balance parameter (>= 3)")->required();
  add_common(cmd_refute, rf_opts);

  // reproduce
  std::vector<std::string> rp_claims;
  bool rp_list = false;
  CommonOpts rp_opts;
  auto* cmd_reproduce = app.add_subcommand("reproduce", "Run the full claim-check suite");
  cmd_reproduce->add_option("--claims", rp_claims, "Claim ids to run (default: all)")->delimiter(',');
  cmd_reproduce->add_flag("--list", rp_list, "List known claim ids and exit");
  add_common(cmd_reproduce, rp_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_distance) {
      const auto a = ktc::Permutation::parse(perm_a);
      const auto b = ktc::Permutation::parse(perm_b);
      std::cout << ktc::distance(a, b) << '\n';
      return kExitOk;
    }
    if (*cmd_weight) {
      std::cout << ktc::weight(ktc::Permutation::parse(perm_w)) << '\n';
      return kExitOk;
    }
    if (*cmd_puncture) {
      const auto a = ktc::Permutation::parse(perm_p);
      const auto s = ktc::PunctureSet::parse(a.degree(), keep_text);
      std::cout << ktc::puncture(a, s).str() << '\n';
      return kExitOk;
    }
    if (*cmd_ball) {
      std::cout << ktc::ball_size(bs_n, bs_r).str() << '\n';
      return kExitOk;
    }
    if (*cmd_bounds) {
      if ((b_d == 0) == (b_t == 0))
        throw std::invalid_argument("bounds: give exactly one of -d or -t");
      const int n_hi = b_nmax ? b_nmax : b_n;
      json rows = json::array();
      for (int n = b_n; n <= n_hi; ++n) {
        if (b_d) {
          const long long d_hi = std::min<long long>(b_dmax ? b_dmax : b_d, ktc::choose2(n));
          for (long long d = b_d; d <= d_hi; ++d) rows.push_back(bounds_row_d(n, d));
        } else {
          const int t_hi = std::min(b_tmax ? b_tmax : b_t, n);
          for (int t = b_t; t <= t_hi; ++t) rows.push_back(bounds_row_t(n, t));
        }
      }
      if (b_opts.format == "json")
        std::cout << rows.dump(2) << '\n';
      else
        print_table(rows, std::cout);
      return kExitOk;
    }
    if (*cmd_verify) {
      std::ifstream in(v_file);
      if (!in) throw std::invalid_argument("cannot open code file: " + v_file);
      const ktc::Code code = ktc::Code::parse(in);
      const auto verdict = ktc::check_balanced(code, v_t);
      json j;
      j["n"] = code.degree();
      j["size"] = code.size();
      j["min_distance"] = code.min_distance();
      j["t"] = verdict.t;
      j["is_balanced"] = verdict.is_balanced;
      j["cardinality_ok"] = verdict.cardinality_ok;
      j["distance_ok"] = verdict.distance_ok;
      j["mds_ok"] = verdict.mds_ok;
      if (verdict.distance_witness)
        j["distance_witness"] = {verdict.distance_witness->first.str(),
                                 verdict.distance_witness->second.str()};
      j["detail"] = verdict.detail;
      if (static_cast<long long>(code.size()) * 2 == ktc::factorial_ll(code.degree())) {
        const auto witness = ktc::is_coset_of_alternating(code);
        j["coset_of_even_subgroup"] = witness ? json(witness->str()) : json(nullptr);
      }
      if (v_structure) {
        const auto fb = ktc::check_fiber_balance(code, v_t);
        j["fiber_balance"] = {{"pass", fb.pass}, {"detail", fb.detail}};
        const auto uq = ktc::check_unique_codeword_structure(code, v_t);
        j["unique_codeword_structure"] = {{"pass", uq.pass}, {"detail", uq.detail}};
      }
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }
    if (*cmd_gv) {
      const ktc::Code code = ktc::greedy_gv(sg_n, sg_d);
      if (!sg_out.empty()) write_code_file(sg_out, sg_n, code.words());
      json j;
      j["n"] = sg_n;
      j["d"] = sg_d;
      j["size"] = code.size();
      j["min_distance"] = code.min_distance();
      j["guarantee"] = ktc::gv_guarantee(sg_n, sg_d).str();
      if (sg_opts.format == "json") {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "size " << code.size() << ", min distance " << code.min_distance()
                  << ", guarantee " << ktc::gv_guarantee(sg_n, sg_d).str() << '\n';
        code.serialize(std::cout);
      }
      return kExitOk;
    }
    if (*cmd_max) {
      const auto outcome = ktc::max_code(sm_n, sm_d, sm_opts.budget);
      if (!sm_out.empty()) write_code_file(sm_out, sm_n, outcome.best_code);
      const json j = outcome_json(outcome, sm_n);
      if (sm_opts.format == "json")
        std::cout << j.dump(2) << '\n';
      else
        std::cout << "status " << j["status"].get<std::string>() << ", size "
                  << outcome.best_code.size() << ", nodes " << outcome.nodes << '\n'
                  << j["code"].get<std::string>();
      return outcome.status == ktc::SearchStatus::exact ? kExitOk : kExitBudget;
    }
    if (*cmd_classify) {
      const auto codes = ktc::classify_2_balanced(cl_n);
      json j;
      j["n"] = cl_n;
      j["count"] = codes.size();
      j["codes"] = json::array();
      for (const auto& c : codes) {
        std::ostringstream s;
        c.serialize(s);
        const auto witness = ktc::is_coset_of_alternating(c);
        j["codes"].push_back({{"code", s.str()},
                              {"coset_witness", witness ? json(witness->str()) : json(nullptr)}});
      }
      if (cl_opts.format == "json") {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << codes.size() << " codes of size " << ktc::factorial_ll(cl_n) / 2
                  << " with min distance >= 2 in S_" << cl_n << '\n';
        for (const auto& entry : j["codes"])
          std::cout << entry["code"].get<std::string>() << "coset witness: "
                    << (entry["coset_witness"].is_null() ? "none"
                                                         : entry["coset_witness"].get<std::string>())
                    << "\n\n";
      }
      return kExitOk;
    }
    if (*cmd_refute) {
      const auto outcome = ktc::refute_t_balanced(rf_n, rf_t, rf_opts.budget);
      const json j = outcome_json(outcome, rf_n);
      if (rf_opts.format == "json")
        std::cout << j.dump(2) << '\n';
      else
        std::cout << (outcome.certificate.empty() ? j["status"].get<std::string>()
                                                  : outcome.certificate)
                  << '\n';
      if (outcome.status != ktc::SearchStatus::exact) return kExitBudget;
      const long long target =
          ktc::factorial_ll(rf_n) / ktc::factorial_ll(rf_t);
      const bool refuted =
          static_cast<long long>(outcome.best_code.size()) < std::max<long long>(target, 2);
      return refuted ? kExitOk : kExitCheckFailed;
    }
    if (*cmd_reproduce) {
      if (rp_list) {
        for (const auto& id : ktc::claim_ids())
          std::cout << id << ": " << ktc::claim_statement(id) << '\n';
        return kExitOk;
      }
      const auto report = ktc::run_claims(rp_claims, rp_opts.budget);
      json rows = json::array();
      bool any_skipped = false;
      for (const auto& r : report.results) {
        rows.push_back({{"id", r.id},
                        {"statement", r.statement},
                        {"status", status_name(r.status)},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
        any_skipped |= r.status == ktc::ClaimStatus::skipped;
      }
      (void)any_skipped;
      if (rp_opts.format == "json") {
        std::cout << json({{"results", rows}, {"all_pass", report.all_pass()}}).dump(2) << '\n';
      } else {
        for (const auto& r : report.results)
          std::cout << status_name(r.status) << "  " << r.id << "  " << r.detail << '\n';
        std::cout << (report.all_pass() ? "ALL PASS" : "NOT ALL PASS") << '\n';
      }
      if (report.all_pass()) return kExitOk;
      for (const auto& r : report.results)
        if (r.status == ktc::ClaimStatus::fail) return kExitCheckFailed;
      return kExitBudget;  // only skips
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
