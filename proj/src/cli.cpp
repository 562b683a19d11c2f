#include "pinnacle/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinnacle/admissibility.hpp"
#include "pinnacle/embeddings.hpp"
#include "pinnacle/notation.hpp"
#include "pinnacle/oracle.hpp"

namespace pinnacle::cli {

using nlohmann::ordered_json;

Range parse_range(const std::string &text) {
  auto to_int = [&](const std::string &part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ContractViolation("malformed range '" + text + "'");
    return std::stoi(part);
  };
  const auto dots = text.find("..");
  Range range;
  if (dots == std::string::npos) {
    range.first = range.last = to_int(text);
  } else {
    range.first = to_int(text.substr(0, dots));
    range.last = to_int(text.substr(dots + 2));
  }
  if (range.first < 1 || range.first > range.last)
    throw ContractViolation("range '" + text + "' must satisfy 1 <= a <= b");
  return range;
}

std::optional<CliConfig> parse_command_line(int argc, const char *const *argv, std::ostream &out,
                                            std::ostream &err, int &exit_code) {
  CliConfig config;
  CLI::App app{"Admissible pinnacle sets of Z_m wr S_n and G(m,p,n)"};
  app.require_subcommand(1);

  std::string method = "closed-alternating";
  std::string format = "text";
  std::string m_range = "1..10";
  std::string n_range = "3..12";

  auto common = [&](CLI::App *sub, bool with_group) {
    if (with_group) {
      sub->add_option("--m", config.m, "modulus m")->required()->check(CLI::PositiveNumber);
      sub->add_option("--n", config.n, "degree n")->required()->check(CLI::PositiveNumber);
    }
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--output,-o", config.output, "write data to this file");
  };

  auto *count = app.add_subcommand("count", "number of admissible pinnacle sets");
  common(count, true);
  count->add_option("--p", config.p, "p with p | m; counts G(m,p,n)")->check(CLI::PositiveNumber);
  count->add_option("--d", config.d, "maximum cardinality (default floor((n-1)/2))");
  count->add_option("--method", method,
                    "recursion-m | recursion-n | closed-alternating | closed-positive | all");
  count->add_option("--budget", config.budget, "oracle group-order budget");

  auto *check = app.add_subcommand("check", "decide admissibility of a set");
  common(check, true);
  check->add_option("--set", config.set, "set, e.g. \"4:3,2:3,0:1\" or \"empty\"")->required();

  auto *witness = app.add_subcommand("witness", "canonical witness of an admissible set");
  common(witness, true);
  witness->add_option("--set", config.set, "set, e.g. \"1:3,0:5,0:2\"")->required();

  auto *pinnacles = app.add_subcommand("pinnacles", "pinnacle data of a permutation");
  common(pinnacles, true);
  pinnacles->add_option("--perm", config.perm, "permutation w(n) ... w(1)")->required();
  pinnacles->add_option("--p", config.p, "p for the G(m,p,n) membership test")
      ->check(CLI::PositiveNumber);

  auto *table = app.add_subcommand("table", "grid of #APS(m,n)");
  common(table, false);
  table->add_option("--m", m_range, "m range a..b");
  table->add_option("--n", n_range, "n range a..b");
  table->add_option("--method", method, "counting method");

  auto *oracle_cmd = app.add_subcommand("oracle", "exhaustive scan of G(m,p,n)");
  common(oracle_cmd, true);
  oracle_cmd->add_option("--p", config.p, "p with p | m")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--budget", config.budget, "oracle group-order budget");
  oracle_cmd->add_flag("--diff", config.diff, "compare the scan against the formulas");

  auto *shift = app.add_subcommand("shift", "apply the color shift by k");
  common(shift, true);
  shift->add_option("--k", config.k, "shift amount")->required()->check(CLI::NonNegativeNumber);
  auto *shift_set_opt = shift->add_option("--set", config.set, "set to shift");
  auto *shift_perm_opt = shift->add_option("--perm", config.perm, "permutation to shift");
  shift_set_opt->excludes(shift_perm_opt);

  try {
    app.parse(argc, argv);
    config.command = app.get_subcommands().front()->get_name();
    config.method = parse_count_method(method);
    config.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;
    if (config.command == "table") {
      config.m_range = parse_range(m_range);
      config.n_range = parse_range(n_range);
    }
    if (config.command == "shift" && config.set.empty() && config.perm.empty())
      throw ContractViolation("shift needs --set or --perm");
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    exit_code = kOk;
    return std::nullopt;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    exit_code = kOk;
    return std::nullopt;
  } catch (const CLI::ParseError &error) {
    err << "error: " << error.what() << "\n";
    exit_code = kValidationError;
    return std::nullopt;
  } catch (const ContractViolation &error) {
    err << "error: " << error.what() << "\n";
    exit_code = kValidationError;
    return std::nullopt;
  }
  return config;
}

namespace {

ordered_json params_json(const CliConfig &config, std::optional<int> d) {
  ordered_json params{{"m", config.m}, {"p", config.p}, {"n", config.n}};
  if (d)
    params["d"] = *d;
  return params;
}

oracle::OracleBudget budget_for(const CliConfig &config) {
  auto budget = oracle::OracleBudget::from_environment();
  if (config.budget)
    budget.max_group_order = *config.budget;
  return budget;
}

int run_count(const CliConfig &config, std::ostream &out) {
  const int d = config.d.value_or(max_pinnacles(config.n));
  const GroupParams group{config.m, config.p, config.n};
  require_valid(group);

  Count value;
  std::optional<ComplexCount> complex;
  if (config.p == 1) {
    value = count_pinnacle_sets(config.m, config.n, d, config.method, config.hooks);
  } else {
    complex = count_complex(group, d, budget_for(config));
    value = complex->value;
    if (!complex->reduced && config.method == CountMethod::all)
      count_pinnacle_sets(config.m, config.n, d, CountMethod::all, config.hooks);
  }

  switch (config.format) {
  case Format::text:
    out << value.str() << "\n";
    break;
  case Format::csv:
    out << "m,p,n,d,count\n"
        << config.m << ',' << config.p << ',' << config.n << ',' << d << ',' << value.str() << "\n";
    break;
  case Format::json: {
    ordered_json doc{{"params", params_json(config, d)},
                     {"method", complex && complex->reduced ? std::string("odd-reduction")
                                                            : std::string(to_string(config.method))},
                     {"value", value.str()}};
    if (complex && complex->reduced) {
      doc["irreducible"] = complex->irreducible->str();
      doc["correction"] = complex->correction->str();
    }
    out << doc.dump(2) << "\n";
    break;
  }
  }
  return kOk;
}

int run_check(const CliConfig &config, std::ostream &out, std::ostream &err) {
  const Ambient ambient{config.m, config.n};
  const auto set = parse_set(config.set, ambient);
  const auto by_witness = is_admissible(set);
  const auto by_recursion = is_admissible_rec(set);
  const auto by_top = is_admissible_top(set);
  if (by_witness.admissible() != by_recursion.admissible() ||
      by_witness.admissible() != by_top.admissible()) {
    err << "cross-check mismatch: deciders disagree on " << format_set(set) << "\n";
    return kCrossCheckMismatch;
  }
  std::optional<GenPerm> witness;
  if (by_witness)
    witness = canonical_witness(set);

  switch (config.format) {
  case Format::text:
    out << describe(by_witness) << "\n";
    out << "decider-witness: " << describe(by_witness) << "\n";
    out << "decider-recursive: " << describe(by_recursion) << "\n";
    out << "decider-top: " << describe(by_top) << "\n";
    if (witness) {
      out << "witness: " << format_perm(*witness) << "\n";
      out << "display: " << display_perm(*witness) << "\n";
    }
    break;
  case Format::csv:
    out << "set,admissible,reason,witness\n"
        << '"' << format_set(set) << "\"," << (by_witness ? "true" : "false") << ",\""
        << describe(by_witness) << "\",\"" << (witness ? format_perm(*witness) : "") << "\"\n";
    break;
  case Format::json: {
    ordered_json doc{{"params", params_json(config, std::nullopt)},
                     {"set", format_set(set)},
                     {"admissible", by_witness.admissible()},
                     {"reason", describe(by_witness)},
                     {"deciders",
                      {{"witness", by_witness.admissible()},
                       {"recursive", by_recursion.admissible()},
                       {"top", by_top.admissible()}}}};
    if (witness)
      doc["witness"] = format_perm(*witness);
    out << doc.dump(2) << "\n";
    break;
  }
  }
  return kOk;
}

int run_witness(const CliConfig &config, std::ostream &out, std::ostream &err) {
  const auto set = parse_set(config.set, Ambient{config.m, config.n});
  const auto verdict = is_admissible(set);
  if (!verdict) {
    err << "error: " << format_set(set) << " is " << describe(verdict) << "\n";
    return kValidationError;
  }
  const auto witness = canonical_witness(set);
  switch (config.format) {
  case Format::text:
    out << format_perm(witness) << "\n";
    break;
  case Format::csv:
    out << "set,witness\n\"" << format_set(set) << "\",\"" << format_perm(witness) << "\"\n";
    break;
  case Format::json:
    out << ordered_json{{"params", params_json(config, std::nullopt)},
                        {"set", format_set(set)},
                        {"witness", format_perm(witness)},
                        {"display", display_perm(witness)},
                        {"epsilon", color_sum(witness)}}
                   .dump(2)
        << "\n";
    break;
  }
  return kOk;
}

int run_pinnacles(const CliConfig &config, std::ostream &out) {
  const GroupParams group{config.m, config.p, config.n};
  require_valid(group);
  const auto w = parse_perm(config.perm, group.ambient());
  const auto pins = pinnacle_set(w);
  const auto positions = peaks(w);
  const bool member = in_subgroup(w, group);

  std::ostringstream peak_text;
  for (std::size_t i = 0; i < positions.size(); ++i)
    peak_text << (i ? " " : "") << positions[i];

  switch (config.format) {
  case Format::text:
    out << "pinnacles: " << format_set(pins) << "\n";
    out << "display: " << display_set(pins) << "\n";
    out << "peaks: " << peak_text.str() << "\n";
    out << "epsilon: " << color_sum(w) << "\n";
    out << "in G(" << group.m << "," << group.p << "," << group.n
        << "): " << (member ? "true" : "false") << "\n";
    break;
  case Format::csv:
    out << "pinnacles,peaks,epsilon,in_subgroup\n\"" << format_set(pins) << "\",\""
        << peak_text.str() << "\"," << color_sum(w) << ',' << (member ? "true" : "false") << "\n";
    break;
  case Format::json:
    out << ordered_json{{"params", params_json(config, std::nullopt)},
                        {"perm", format_perm(w)},
                        {"pinnacles", format_set(pins)},
                        {"peaks", positions},
                        {"epsilon", color_sum(w)},
                        {"in_subgroup", member}}
                   .dump(2)
        << "\n";
    break;
  }
  return kOk;
}

int run_table(const CliConfig &config, std::ostream &out) {
  struct Cell {
    int m;
    int n;
    Count value;
  };
  std::vector<Cell> cells;
  for (int m = config.m_range.first; m <= config.m_range.last; ++m)
    for (int n = config.n_range.first; n <= config.n_range.last; ++n)
      cells.push_back({m, n, count_total(m, n, config.method, config.hooks)});

  switch (config.format) {
  case Format::csv:
    out << "m,n,count\n";
    for (const auto &cell : cells)
      out << cell.m << ',' << cell.n << ',' << cell.value.str() << "\n";
    break;
  case Format::json: {
    ordered_json rows = ordered_json::array();
    for (const auto &cell : cells)
      rows.push_back({{"m", cell.m}, {"n", cell.n}, {"count", cell.value.str()}});
    out << ordered_json{{"method", to_string(config.method)}, {"rows", rows}}.dump(2) << "\n";
    break;
  }
  case Format::text: {
    std::size_t width = 4;
    for (const auto &cell : cells)
      width = std::max(width, cell.value.str().size() + 1);
    out << std::setw(4) << "m\\n";
    for (int n = config.n_range.first; n <= config.n_range.last; ++n)
      out << std::setw(static_cast<int>(width)) << n;
    out << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].n == config.n_range.first)
        out << std::setw(4) << cells[i].m;
      out << std::setw(static_cast<int>(width)) << cells[i].value.str();
      if (cells[i].n == config.n_range.last)
        out << "\n";
    }
    break;
  }
  }
  return kOk;
}

int run_oracle(const CliConfig &config, std::ostream &out, std::ostream &err) {
  const GroupParams group{config.m, config.p, config.n};
  require_valid(group);
  const auto budget = budget_for(config);
  const auto report = oracle::collect_pinnacle_sets(group, budget);
  const int cap = max_pinnacles(config.n);

  int status = kOk;
  if (config.diff) {
    for (int d = 0; d <= cap; ++d) {
      const Count expected = count_complex(group, d, budget).value;
      const Count observed = report.count_up_to(d);
      if (expected != observed) {
        err << "cross-check mismatch at d=" << d << ": oracle " << observed.str() << ", formula "
            << expected.str() << "\n";
        status = kCrossCheckMismatch;
      }
    }
  }

  switch (config.format) {
  case Format::text:
    out << "group: G(" << group.m << "," << group.p << "," << group.n << ")\n";
    out << "scanned: " << report.scanned() << "\n";
    for (int d = 0; d <= cap; ++d)
      out << "APS_" << d << ": " << report.count_up_to(d) << "\n";
    out << "total: " << report.size() << "\n";
    if (config.diff)
      out << "diff: " << (status == kOk ? "agrees with formulas" : "MISMATCH") << "\n";
    for (const auto &[mask, stats] : report.by_mask())
      out << format_set(PinSet::from_mask(report.ambient(), mask)) << " witnesses=" << stats.witnesses
          << " eps=[" << stats.eps_min << "," << stats.eps_max << "]\n";
    break;
  case Format::csv:
    out << "set,size,witnesses,eps_min,eps_max\n";
    for (const auto &[mask, stats] : report.by_mask()) {
      const auto set = PinSet::from_mask(report.ambient(), mask);
      out << '"' << format_set(set) << "\"," << set.size() << ',' << stats.witnesses << ','
          << stats.eps_min << ',' << stats.eps_max << "\n";
    }
    break;
  case Format::json: {
    ordered_json counts = ordered_json::array();
    for (int d = 0; d <= cap; ++d)
      counts.push_back(report.count_up_to(d));
    ordered_json sets = ordered_json::array();
    for (const auto &[mask, stats] : report.by_mask()) {
      const auto set = PinSet::from_mask(report.ambient(), mask);
      sets.push_back({{"set", format_set(set)},
                      {"size", set.size()},
                      {"witnesses", stats.witnesses},
                      {"eps_min", stats.eps_min},
                      {"eps_max", stats.eps_max},
                      {"eps_contiguous", stats.eps_contiguous()}});
    }
    out << ordered_json{{"params", params_json(config, std::nullopt)},
                        {"scanned", report.scanned()},
                        {"counts_by_d", counts},
                        {"value", std::to_string(report.size())},
                        {"sets", sets}}
                   .dump(2)
        << "\n";
    break;
  }
  }
  return status;
}

int run_shift(const CliConfig &config, std::ostream &out) {
  const ShiftParams params{config.m, config.k, config.n};
  std::string source;
  std::string shifted;
  if (!config.set.empty()) {
    source = config.set;
    shifted = format_set(shift_set(parse_set(config.set, params.source()), params));
  } else {
    source = config.perm;
    shifted = format_perm(shift_perm(parse_perm(config.perm, params.source()), params));
  }
  switch (config.format) {
  case Format::text:
    out << shifted << "\n";
    break;
  case Format::csv:
    out << "source,k,target_modulus,shifted\n\"" << source << "\"," << config.k << ','
        << params.target_modulus() << ",\"" << shifted << "\"\n";
    break;
  case Format::json:
    out << ordered_json{{"params", params_json(config, std::nullopt)},
                        {"k", config.k},
                        {"target_modulus", params.target_modulus()},
                        {"value", shifted}}
                   .dump(2)
        << "\n";
    break;
  }
  return kOk;
}

} // namespace

int run(const CliConfig &config, std::ostream &out, std::ostream &err) {
  try {
    if (config.command == "count")
      return run_count(config, out);
    if (config.command == "check")
      return run_check(config, out, err);
    if (config.command == "witness")
      return run_witness(config, out, err);
    if (config.command == "pinnacles")
      return run_pinnacles(config, out);
    if (config.command == "table")
      return run_table(config, out);
    if (config.command == "oracle")
      return run_oracle(config, out, err);
    if (config.command == "shift")
      return run_shift(config, out);
    err << "error: unknown command '" << config.command << "'\n";
    return kValidationError;
  } catch (const CrossCheckMismatch &error) {
    err << "error: " << error.what() << "\n";
    return kCrossCheckMismatch;
  } catch (const oracle::BudgetRefusal &error) {
    err << "error: " << error.what() << "; irreducible subproblem needs a larger --budget or "
        << oracle::kBudgetEnvVar << "\n";
    return kBudgetRefusal;
  } catch (const ContractViolation &error) {
    err << "error: " << error.what() << "\n";
    return kValidationError;
  }
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  int exit_code = kOk;
  auto config = parse_command_line(argc, argv, out, err, exit_code);
  if (!config)
    return exit_code;
  if (config->output.empty())
    return run(*config, out, err);
  std::ofstream file(config->output);
  if (!file) {
    err << "error: cannot open '" << config->output << "' for writing\n";
    return kValidationError;
  }
  return run(*config, file, err);
}

} // namespace pinnacle::cli
