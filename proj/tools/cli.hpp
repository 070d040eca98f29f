#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hirreg/hirreg.hpp"

namespace hirreg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,       // usage error or malformed input
  kRejected = 2,    // verification rejected / oracle disagreement
  kResourceLimit = 3,
};

namespace detail {

inline std::vector<int> parse_ints(const std::string& text, std::size_t count, const char* what) {
  std::vector<int> values;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, std::string(what) + " expects " + std::to_string(count) +
                                        " comma-separated integers, got '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != count) {
    throw Error(ErrorCode::Parse, std::string(what) + " expects " + std::to_string(count) +
                                      " comma-separated integers, got '" + text + "'");
  }
  return values;
}

/// "A..B" or a single "A".
inline IntRange parse_range(const std::string& text, const char* what) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, std::string(what) + " expects A..B, got '" + text + "'");
  }
}

inline std::optional<int> cap_bits_override() {
  const char* raw = std::getenv("HIRREG_ORACLE_CAP_BITS");
  if (!raw || !*raw) return std::nullopt;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, std::string("HIRREG_ORACLE_CAP_BITS is not an integer: ") + raw);
  }
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"H-irregular labelings of grids covered by column windows", "hirreg"};
  app.require_subcommand(1);

  const std::vector<std::string> kind_names{"vertex", "edge", "total"};

  std::string kind;
  int m = 0, c = 0, n = 0;
  std::string variant = "corrected";
  std::string out_path;

  auto* construct = app.add_subcommand("construct", "Write the constructed labeling to a file");
  construct->add_option("--kind", kind)->required()->check(CLI::IsMember(kind_names));
  construct->add_option("-m", m, "rows")->required();
  construct->add_option("-c", c, "window width")->required();
  construct->add_option("-n", n, "columns")->required();
  construct->add_option("--variant", variant)
      ->check(CLI::IsMember({"corrected", "as-printed", "as_printed"}));
  construct->add_option("--out", out_path)->required();

  std::string labeling_path, family_path, grid_text;
  auto* verify = app.add_subcommand("verify", "Check a labeling against a covering family");
  verify->add_option("--labeling", labeling_path)->required();
  auto* family_opt = verify->add_option("--family", family_path);
  auto* grid_opt = verify->add_option("--grid", grid_text, "M,C,N");
  family_opt->excludes(grid_opt);
  grid_opt->excludes(family_opt);

  auto* bound = app.add_subcommand("bound", "Lower bound and upper-bound exponent");
  bound->add_option("--kind", kind)->required()->check(CLI::IsMember(kind_names));
  bound->add_option("-m", m)->required();
  bound->add_option("-c", c)->required();
  bound->add_option("-n", n)->required();

  bool oracle = false;
  auto* strength = app.add_subcommand("strength", "Strength report, optionally oracle-checked");
  strength->add_option("--kind", kind)->required()->check(CLI::IsMember(kind_names));
  strength->add_option("-m", m)->required();
  strength->add_option("-c", c)->required();
  strength->add_option("-n", n)->required();
  strength->add_flag("--oracle", oracle, "confirm by exhaustive search");

  std::string m_range, c_range, n_range;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of closed forms and verification flags");
  sweep_cmd->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"vertex", "edge", "total", "all"}));
  sweep_cmd->add_option("--m-range", m_range)->required();
  sweep_cmd->add_option("--c-range", c_range)->required();
  sweep_cmd->add_option("--n-range", n_range)->required();
  sweep_cmd->add_option("--csv", out_path, "output file, '-' for stdout")->required();
  sweep_cmd->add_option("--variant", variant)
      ->check(CLI::IsMember({"corrected", "as-printed", "as_printed"}));

  std::string format;
  int windows = 0;
  auto* export_cmd = app.add_subcommand("export", "Emit a grid (and labeling) as DOT or JSON");
  export_cmd->add_option("--grid", grid_text, "M,N")->required();
  export_cmd->add_option("--labeling", labeling_path);
  export_cmd->add_option("--windows", windows, "window width C: include the covering family");
  export_cmd->add_option("--format", format)->required()->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--out", out_path, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*construct) {
      auto shape = CoverShape::checked(m, c, n);
      auto labeling = construct_labeling(parse_kind(kind), shape, parse_variant(variant));
      write_text_file(out_path, labeling_to_text(labeling, shape.grid()));
      out << "wrote " << to_string(labeling.kind()) << " labeling with k = " << labeling.k()
          << " to " << out_path << "\n";
      return kSuccess;
    }

    if (*verify) {
      if (family_path.empty() == grid_text.empty()) {
        err << "verify needs exactly one of --family or --grid\n";
        return kUsage;
      }
      auto file = labeling_from_json(read_json_file(labeling_path));
      std::optional<CoverFamily> family;
      if (!grid_text.empty()) {
        auto mcn = detail::parse_ints(grid_text, 3, "--grid");
        family = enumerate_windows(CoverShape::checked(mcn[0], mcn[1], mcn[2]));
      } else {
        family = family_from_json(read_json_file(family_path));
      }
      auto verdict = verify_irregular(file.labeling, *family);
      if (!verdict.accepted) {
        err << "rejected: " << describe(*verdict.violation) << "\n";
        return kRejected;
      }
      out << "accepted: " << to_string(file.labeling.kind()) << " labeling, k = "
          << file.labeling.k() << ", weights";
      for (auto w : weight_profile(file.labeling, *family)) out << " " << w;
      out << "\n";
      return kSuccess;
    }

    if (*bound) {
      auto report = bound_report(parse_kind(kind), CoverShape::checked(m, c, n));
      json j = {{"kind", kind},
                {"lower_bound", report.lower},
                {"upper_bound_exponent", report.upper_exponent}};
      if (auto upper = report.upper()) j["upper_bound"] = *upper;
      out << j.dump(2) << "\n";
      return kSuccess;
    }

    if (*strength) {
      auto shape = CoverShape::checked(m, c, n);
      std::optional<SearchOptions> search;
      if (oracle) {
        search.emplace();
        if (auto bits = detail::cap_bits_override()) search->cap_bits = *bits;
      }
      auto report = strength_report(parse_kind(kind), shape, search);
      out << report_to_json(report).dump(2) << "\n";
      if (!report.construction_verified) {
        err << "constructed labeling failed verification\n";
        return kRejected;
      }
      if (report.discrepancy()) {
        err << "oracle disagrees with the closed form\n";
        return kRejected;
      }
      return kSuccess;
    }

    if (*sweep_cmd) {
      std::vector<LabelingKind> kinds;
      if (kind == "all") {
        kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
      } else {
        kinds.push_back(parse_kind(kind));
      }
      auto rows = sweep(kinds, detail::parse_range(m_range, "--m-range"),
                        detail::parse_range(c_range, "--c-range"),
                        detail::parse_range(n_range, "--n-range"), parse_variant(variant));
      detail::emit(sweep_csv(rows), out_path, out);
      return kSuccess;
    }

    if (*export_cmd) {
      auto mn = detail::parse_ints(grid_text, 2, "--grid");
      const GridSpec spec{mn[0], mn[1]};
      auto grid = make_grid(spec);
      std::optional<Labeling> labeling;
      if (!labeling_path.empty()) {
        labeling = labeling_from_json(read_json_file(labeling_path)).labeling;
        check_domain(*labeling, grid);
      }
      std::optional<CoverFamily> family;
      if (windows > 0) family = enumerate_windows(grid, windows);

      std::string text;
      if (format == "dot") {
        text = to_dot(grid, labeling ? &*labeling : nullptr, family ? &*family : nullptr);
      } else if (labeling && family) {
        err << "json export takes either --labeling or --windows, not both\n";
        return kUsage;
      } else if (labeling) {
        text = labeling_to_text(*labeling, spec);
      } else if (family) {
        text = family_to_json(*family).dump(2) + "\n";
      } else {
        json j = graph_to_json(grid);
        j["m"] = spec.m;
        j["n"] = spec.n;
        text = j.dump(2) + "\n";
      }
      detail::emit(text, out_path, out);
      return kSuccess;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::ResourceLimit ? kResourceLimit : kUsage;
  }
  return kUsage;
}

}  // namespace hirreg::cli
