// lsverify: batch verification front-end. Runs named identity checks on the
// Lawrence-Sullivan model, the perturbed tensor cylinder, the BCH series and
// the Bernoulli identities, at a configurable truncation order, and reports
// pass/fail with the first offending word or index tuple.
//
// Exit status: 0 when every executed check passes, 1 when a check fails,
// 2 for usage errors.

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

#include "lsv/bch.hpp"
#include "lsv/bernoulli.hpp"
#include "lsv/checks.hpp"
#include "lsv/cylinder.hpp"
#include "lsv/gauge.hpp"
#include "lsv/json_render.hpp"
#include "lsv/models.hpp"

namespace {

int cmd_bernoulli(int max, bool json) {
  auto table = lsv::bernoulli_table(std::size_t(max));
  if (json) {
    nlohmann::ordered_json j;
    j["max"] = max;
    auto values = nlohmann::ordered_json::array();
    for (const auto& b : table) values.push_back(lsv::to_string(b));
    j["values"] = std::move(values);
    std::cout << j.dump() << "\n";
  } else {
    for (std::size_t n = 0; n < table.size(); ++n)
      std::cout << "B_" << n << " = " << lsv::to_string(table[n]) << "\n";
  }
  return 0;
}

int cmd_bch(int order, const std::string& form, bool json) {
  lsv::Series series = form == "direct"  ? lsv::bch_direct(order)
                       : form == "linear" ? lsv::bch_linear_closed(order)
                                          : lsv::bch_log(order);
  if (json) {
    nlohmann::ordered_json j;
    j["order"] = order;
    j["form"] = form;
    j["terms"] = lsv::series_terms_json(series);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << series.to_text() << "\n";
  }
  return 0;
}

int cmd_gauge(const std::string& model_name, const std::string& x_name,
              const std::string& a_name, int order) {
  lsv::DifferentialModel model = model_name == "interval"
                                     ? lsv::model_interval(order)
                                     : lsv::model_ls(order);
  lsv::Series result =
      lsv::gauge(model, model.generator(x_name), model.generator(a_name));
  std::cout << result.to_text() << "\n";
  return 0;
}

lsv::DifferentialModel model_by_name(const std::string& name, int order) {
  if (name == "s0") return lsv::model_s0(order);
  if (name == "ls") return lsv::model_ls(order);
  if (name == "interval") return lsv::model_interval(order);
  if (name == "cyl") return lsv::cyl_classical(order);
  return lsv::cyl_perturbed(order);  // cyl-perturbed
}

int cmd_model(const std::string& name, int order, bool json) {
  lsv::DifferentialModel model = model_by_name(name, order);
  if (json) {
    nlohmann::ordered_json j;
    j["model"] = model.name;
    j["kind"] = model.kind;
    j["order"] = model.order;
    auto generators = nlohmann::ordered_json::array();
    for (std::size_t g = 0; g < model.alphabet->size(); ++g) {
      generators.push_back(
          {{"name", model.alphabet->name(lsv::Letter(g))},
           {"degree", model.alphabet->degree(lsv::Letter(g))},
           {"differential",
            lsv::series_terms_json(model.differential.image(lsv::Letter(g)))}});
    }
    j["generators"] = std::move(generators);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << model.name << " (" << model.kind << "), order " << model.order
              << "\n";
    for (std::size_t g = 0; g < model.alphabet->size(); ++g) {
      const std::string& gen = model.alphabet->name(lsv::Letter(g));
      std::cout << "  " << gen << " (degree "
                << model.alphabet->degree(lsv::Letter(g)) << "): d(" << gen
                << ") = " << model.differential.image(lsv::Letter(g)).to_text()
                << "\n";
    }
  }
  return 0;
}

void print_report(const lsv::CheckReport& report, bool json) {
  std::cout << (json ? lsv::report_json(report) : lsv::report_text(report))
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the Lawrence-Sullivan model, its "
               "cylinder comparison, and the associated Bernoulli identities"};
  app.require_subcommand(1);

  int b_max = 10;
  bool b_json = false;
  auto* bernoulli_cmd =
      app.add_subcommand("bernoulli", "print the Bernoulli table B_0..B_max");
  bernoulli_cmd->add_option("--max", b_max, "largest index (default 10)")
      ->check(CLI::Range(0, 2000));
  bernoulli_cmd->add_flag("--json", b_json, "one structured record");

  int bch_order = 8;
  std::string bch_form = "log";
  bool bch_json = false;
  auto* bch_cmd =
      app.add_subcommand("bch", "print a BCH series in canonical form");
  bch_cmd->add_option("--order", bch_order, "truncation order (default 8)")
      ->check(CLI::Range(1, 12));
  bch_cmd->add_option("--form", bch_form, "log | direct | linear (default log)")
      ->check(CLI::IsMember({"log", "direct", "linear"}));
  bch_cmd->add_flag("--json", bch_json, "one structured record");

  std::string g_model = "ls", g_x, g_a;
  int g_order = 8;
  auto* gauge_cmd = app.add_subcommand(
      "gauge", "apply the gauge action of generator --x to generator --a");
  gauge_cmd->add_option("--model", g_model, "ls | interval (default ls)")
      ->check(CLI::IsMember({"ls", "interval"}));
  gauge_cmd->add_option("--x", g_x, "degree-0 generator name")->required();
  gauge_cmd->add_option("--a", g_a, "degree -1 generator name")->required();
  gauge_cmd->add_option("--order", g_order, "truncation order (default 8)")
      ->check(CLI::Range(2, 16));

  std::string m_name;
  int m_order = 8;
  bool m_json = false;
  auto* model_cmd = app.add_subcommand(
      "model", "print a named model's generators and differential");
  model_cmd->add_option("name", m_name, "s0 | ls | interval | cyl | cyl-perturbed")
      ->required()
      ->check(CLI::IsMember({"s0", "ls", "interval", "cyl", "cyl-perturbed"}));
  model_cmd->add_option("--order", m_order, "truncation order (default 8)")
      ->check(CLI::Range(2, 16));
  model_cmd->add_flag("--json", m_json, "one structured record");

  std::string v_check;
  lsv::CheckParams v_params;
  bool v_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run one named check");
  verify_cmd->add_option("check", v_check, "check name")->required();
  verify_cmd->add_option("--order", v_params.order, "truncation order");
  verify_cmd->add_option("--max-n", v_params.max_n, "identity range bound");
  verify_cmd->add_option("--max-weight", v_params.max_weight,
                         "composition-tuple weight bound (bch-cross)");
  verify_cmd->add_option("--variant", v_params.variant,
                         "gen-euler: as-printed | sum-corrected | both");
  verify_cmd->add_flag("--json", v_json, "one structured record per check");

  lsv::CheckParams all_params;
  bool all_json = false;
  auto* all_cmd = app.add_subcommand(
      "run-all", "run every check (identity ranges at their batch values)");
  all_cmd->add_option("--order", all_params.order,
                      "truncation order (default 8)");
  all_cmd->add_flag("--json", all_json, "one structured record per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bernoulli_cmd->parsed()) return cmd_bernoulli(b_max, b_json);
    if (bch_cmd->parsed()) return cmd_bch(bch_order, bch_form, bch_json);
    if (gauge_cmd->parsed()) return cmd_gauge(g_model, g_x, g_a, g_order);
    if (model_cmd->parsed()) return cmd_model(m_name, m_order, m_json);
    if (verify_cmd->parsed()) {
      if (!lsv::is_check_name(v_check)) {
        std::cerr << "unknown check: " << v_check << "\nknown checks:";
        for (const auto& name : lsv::check_names()) std::cerr << " " << name;
        std::cerr << "\n";
        return 2;
      }
      lsv::CheckReport report = lsv::run_check(v_check, v_params);
      print_report(report, v_json);
      return report.pass ? 0 : 1;
    }
    if (all_cmd->parsed()) {
      bool all_pass = true;
      for (const auto& report : lsv::run_all(all_params)) {
        print_report(report, all_json);
        all_pass = all_pass && report.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
