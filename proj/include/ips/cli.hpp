// Copyright 2026 The IPS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 ok, 1 invalid input, 2 infeasible,
// 64 usage error.

#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ips/config.hpp"
#include "ips/manifest.hpp"
#include "ips/scenario.hpp"
#include "ips/service.hpp"

namespace ips {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 64;

namespace detail {

struct CliContext {
  std::string csv;
  std::string config_path;
  LoadedConfig loaded;

  const EngineConfig& config() const { return loaded.config; }

  std::string manifest_path() const {
    if (!csv.empty()) return csv;
    if (loaded.manifest_path) return *loaded.manifest_path;
    throw ValidationError("no manifest: pass --csv FILE or set \"manifest\" in the config");
  }

  ManifestParse manifest(std::ostream& err) const {
    auto parsed = load_manifest(manifest_path(), config().cargo_pickup);
    for (const auto& e : parsed.errors) err << "warning: " << format_error(e) << "\n";
    return parsed;
  }

  Dataset dataset(std::ostream& err) const {
    auto parsed = manifest(err);
    Date day = operational_day(config(), parsed.containers);
    return {std::move(parsed.containers), day};
  }
};

inline void print_schedule(std::ostream& out, const Schedule& s) {
  out << "block,trucks,threshold,congested\n";
  const double io = internal_op_time(s.params);
  for (const auto& b : s.blocks)
    out << b.index << "," << b.truck_count() << "," << s.threshold() << ","
        << (departure_time(b.truck_count(), s.params) > io ? "yes" : "no") << "\n";
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yard stacking and truck appointment planner", "ips"};
  app.fallthrough();
  app.require_subcommand(1);
  detail::CliContext ctx;
  app.add_option("--csv", ctx.csv, "Container manifest (CSV)");
  app.add_option("--config", ctx.config_path, "Engine config (JSON); overrides $IPS_CONFIG");

  auto* ingest = app.add_subcommand("ingest", "Validate a manifest and summarise it");
  auto* classify = app.add_subcommand("classify", "Print stacking class and category per container");

  auto* optimize = app.add_subcommand("optimize", "Run one yard scenario");
  int scenario = 0;
  std::optional<std::uint64_t> seed;
  optimize->add_option("--scenario", scenario, "1 random, 2 random+segments, 3 Z-score, 4 full")
      ->required()
      ->check(CLI::Range(1, 4));
  optimize->add_option("--seed", seed, "Seed for the random scenarios");

  auto* schedule = app.add_subcommand("schedule", "Show the appointment book");
  bool do_rebalance = false;
  schedule->add_flag("--rebalance", do_rebalance, "Rebalance congested blocks and fill slack");

  auto* report = app.add_subcommand("report", "Run all four scenarios");
  std::string format = "text";
  report->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  report->add_option("--seed", seed, "Seed for the random scenarios");

  auto* serve = app.add_subcommand("serve", "Start the HTTP service");
  int port = 8080;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Bind address");

  if (args.empty()) {
    out << app.help();
    return kExitUsage;
  }
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    ctx.loaded = load_config(ctx.config_path.empty() ? std::nullopt : std::optional(ctx.config_path));
    const std::uint64_t run_seed = seed.value_or(ctx.config().seed);

    if (*ingest) {
      auto parsed = ctx.manifest(err);
      std::map<Category, int> census;
      auto day = operational_day(ctx.config(), parsed.containers);
      for (const auto& c : classify_all(parsed.containers, day, ctx.config().discriminant))
        ++census[c.operational_category];
      out << "containers = " << parsed.containers.size() << "\n";
      out << "rejected_rows = " << parsed.errors.size() << "\n";
      out << "operational_day = " << format_date(day) << "\n";
      for (auto cat : {Category::Cat1, Category::Cat2, Category::Cat3})
        out << "census." << to_string(cat) << " = " << census[cat] << "\n";
      return parsed.errors.empty() ? kExitOk : kExitInvalid;
    }
    if (*classify) {
      auto data = ctx.dataset(err);
      auto classes = classify_all(data.containers, data.current_date, ctx.config().discriminant);
      out << "container_id,cargo_value,consignee_value,score_c1,score_c2,score_c3,stack_class,category,"
             "remaining_free_days\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        out << data.containers[i].id << "," << format_minutes(c.cargo_value) << ","
            << format_minutes(c.consignee_value) << "," << format_minutes(c.scores[0]) << ","
            << format_minutes(c.scores[1]) << "," << format_minutes(c.scores[2]) << ","
            << to_string(c.stack_class) << "," << to_string(c.operational_category) << ","
            << c.remaining_free_days << "\n";
      }
      return kExitOk;
    }
    if (*optimize) {
      auto result = run_scenario(ctx.dataset(err), scenario_from_number(scenario), ctx.config(), run_seed);
      out << to_text(result);
      return kExitOk;
    }
    if (*schedule) {
      auto data = ctx.dataset(err);
      auto classes = classify_all(data.containers, data.current_date, ctx.config().discriminant);
      auto book = schedule_from_manifest(data.containers, classes, data.current_date, ctx.config().terminal);
      if (!do_rebalance) {
        detail::print_schedule(out, book);
        return kExitOk;
      }
      auto result = run_recursive(book, slack_candidates(data.containers, classes, book));
      detail::print_schedule(out, result.schedule);
      out << "moves = " << result.report.moved_count() << "\n";
      out << "created = " << result.report.created.size() << "\n";
      out << "iterations = " << result.report.iterations << "\n";
      out << "converged = " << (result.report.converged ? "true" : "false") << "\n";
      for (const auto& m : result.report.moves)
        out << "move " << m.container_id << " " << m.from_block << " -> " << m.to_block << " ("
            << to_string(m.reason) << ")\n";
      for (const auto& c : result.report.created) out << "created " << c.container_id << " " << c.block << "\n";
      return kExitOk;
    }
    if (*report) {
      auto data = ctx.dataset(err);
      std::vector<ScenarioResult> results;
      for (int k = 1; k <= 4; ++k)
        results.push_back(run_scenario(data, scenario_from_number(k), ctx.config(), run_seed));
      if (format == "csv") {
        out << to_csv(results);
      } else {
        for (std::size_t i = 0; i < results.size(); ++i) out << (i ? "\n" : "") << to_text(results[i]);
      }
      return kExitOk;
    }
    if (*serve) {
      std::vector<Container> containers;
      if (!ctx.csv.empty() || ctx.loaded.manifest_path) containers = ctx.manifest(err).containers;
      Service service(ctx.config(), std::move(containers));
      err << "listening on http://" << host << ":" << port << "\n";
      if (!service.listen(host, port)) {
        err << "error: cannot bind " << host << ":" << port << "\n";
        return kExitInvalid;
      }
      return kExitOk;
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace ips
