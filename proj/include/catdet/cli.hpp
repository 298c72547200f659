#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "catdet/boundary.hpp"
#include "catdet/catalan.hpp"
#include "catdet/combinat.hpp"
#include "catdet/io.hpp"
#include "catdet/lattice.hpp"
#include "catdet/matrix.hpp"
#include "catdet/pascal.hpp"
#include "catdet/series.hpp"
#include "catdet/verify.hpp"

namespace catdet::cli {

// Everything on stdout renders integers as decimal strings, so payloads
// survive JSON parsers that would mangle big integers.

namespace detail {

inline std::string scalar_text(const json& value, const std::string& list_sep) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) joined += list_sep;
      joined += scalar_text(value[i], list_sep);
    }
    return joined;
  }
  return value.dump();
}

/// Flat documents render as one header and one value row (csv) or as
/// "key: value" lines (text). Arrays inside a csv cell are ';'-joined so the
/// cell stays one column.
inline std::string render_flat(const json& j, const std::string& format) {
  if (format == "json") return j.dump() + "\n";
  std::string out;
  if (format == "csv") {
    std::string header, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += it.key();
      row += scalar_text(it.value(), ";");
    }
    out = header + "\n" + row + "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      out += it.key() + ": " + scalar_text(it.value(), ", ") + "\n";
  }
  return out;
}

inline std::string render_report(const VerificationReport& report, const std::string& format) {
  if (format == "json") return report.to_json().dump() + "\n";
  std::string out;
  if (format == "csv") {
    out = "identity_id,status,checked,failures\n";
    out += report.identity_id + "," + (report.passed() ? "pass" : "fail") + "," +
           std::to_string(report.checked) + "," + std::to_string(report.failures.size()) + "\n";
    return out;
  }
  out = report.identity_id + ": " + (report.passed() ? "pass" : "fail") +
        " (checked=" + std::to_string(report.checked) +
        ", failures=" + std::to_string(report.failures.size()) + ")\n";
  for (const VerificationFailure& f : report.failures) {
    out += "  ";
    for (std::size_t i = 0; i < f.params.size(); ++i)
      out += (i ? ", " : "") + f.params[i].first + "=" + f.params[i].second;
    out += ": expected " + f.expected + ", got " + f.actual + "\n";
  }
  return out;
}

inline json strings(const std::vector<ExactInt>& values) {
  json arr = json::array();
  for (const ExactInt& v : values) arr.push_back(to_decimal(v));
  return arr;
}

}  // namespace detail

/// Run the command line given as ordinary argv order (program name excluded).
/// Returns the process exit code: 0 success / all identities pass, 1 a
/// verification sweep found failures, 2 usage or validation errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact determinant identities of the deformed Pascal triangle"};
  app.name("catdet");
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"json", "csv", "text"};

  // catalan ------------------------------------------------------------------
  auto* catalan_cmd = app.add_subcommand("catalan", "Catalan numbers by several engines");
  long long catalan_n = 0;
  std::string catalan_method = "det";
  std::string catalan_format = "json";
  catalan_cmd->add_option("--n", catalan_n, "Index of the Catalan number")->required();
  catalan_cmd->add_option("--method", catalan_method, "det, mingantu, closed, or all")
      ->check(CLI::IsMember({"det", "mingantu", "closed", "all"}));
  catalan_cmd->add_option("--format", catalan_format, "json, csv, or text")
      ->check(CLI::IsMember(formats));

  // hessdet ------------------------------------------------------------------
  auto* hessdet_cmd =
      app.add_subcommand("hessdet", "Determinant of an upper Hessenberg matrix from a file");
  std::string hessdet_input;
  std::string hessdet_engine = "both";
  std::string hessdet_format = "json";
  hessdet_cmd->add_option("--input", hessdet_input, "Matrix file (rows/cols/entries)")
      ->required();
  hessdet_cmd->add_option("--engine", hessdet_engine, "recurrence, bareiss, or both")
      ->check(CLI::IsMember({"recurrence", "bareiss", "both"}));
  hessdet_cmd->add_option("--format", hessdet_format, "json, csv, or text")
      ->check(CLI::IsMember(formats));

  // paths ----------------------------------------------------------------------
  auto* paths_cmd = app.add_subcommand("paths", "Constrained lattice-path counting");
  paths_cmd->require_subcommand(1);

  auto* count_cmd = paths_cmd->add_subcommand("count", "Count paths between height boundaries");
  std::vector<long long> count_a, count_b;
  std::string count_input;
  std::string count_method = "both";
  std::string count_format = "json";
  auto* opt_a = count_cmd->add_option("--a", count_a, "Upper heights, comma separated")
                    ->delimiter(',');
  auto* opt_b = count_cmd->add_option("--b", count_b, "Lower heights, comma separated")
                    ->delimiter(',');
  auto* opt_bounds_file =
      count_cmd->add_option("--input", count_input, "Boundary file with sequences \"a\" and \"b\"");
  opt_bounds_file->excludes(opt_a)->excludes(opt_b);
  count_cmd->add_option("--method", count_method, "det, dp, or both")
      ->check(CLI::IsMember({"det", "dp", "both"}));
  count_cmd->add_option("--format", count_format, "json, csv, or text")
      ->check(CLI::IsMember(formats));

  auto* dyck_cmd = paths_cmd->add_subcommand("dyck", "Count staircase paths under the diagonal");
  long long dyck_n = 0;
  std::string dyck_format = "json";
  dyck_cmd->add_option("--n", dyck_n, "Number of steps")->required();
  dyck_cmd->add_option("--format", dyck_format, "json, csv, or text")
      ->check(CLI::IsMember(formats));

  // series -----------------------------------------------------------------------
  auto* series_cmd = app.add_subcommand("series", "Truncated power series operations");
  series_cmd->require_subcommand(1);

  auto* recip_cmd = series_cmd->add_subcommand("recip", "Reciprocal of a unit-constant series");
  long long recip_n = -1;
  std::vector<std::string> recip_coeffs;
  std::string recip_input;
  long long recip_order = -1;
  std::string recip_format = "json";
  auto* opt_recip_n =
      recip_cmd->add_option("--n", recip_n, "Invert (1+x)^n and cross-check via minors");
  auto* opt_recip_coeffs =
      recip_cmd->add_option("--coeffs", recip_coeffs, "Series coefficients, comma separated")
          ->delimiter(',');
  auto* opt_recip_file =
      recip_cmd->add_option("--input", recip_input, "Series file with \"coeffs\" and \"order\"");
  opt_recip_n->excludes(opt_recip_coeffs)->excludes(opt_recip_file);
  opt_recip_coeffs->excludes(opt_recip_file);
  recip_cmd->add_option("--order", recip_order, "Truncation order of the result");
  recip_cmd->add_option("--format", recip_format, "json, csv, or text")
      ->check(CLI::IsMember(formats));

  // table ------------------------------------------------------------------------
  auto* table_cmd = app.add_subcommand("table", "Square Pascal table with one column marked");
  long long table_rows = 0;
  long long table_highlight = 7;
  std::string table_format = "json";
  table_cmd->add_option("--rows", table_rows, "Number of rows")->required();
  table_cmd->add_option("--highlight", table_highlight, "Column to mark (0-indexed)");
  table_cmd->add_option("--format", table_format, "json, csv, or text")
      ->check(CLI::IsMember(formats));

  // verify -----------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Sweep one identity over a parameter grid");
  std::string verify_identity;
  VerifyOptions verify_opt;
  std::string verify_format = "json";
  verify_cmd
      ->add_option("--identity", verify_identity,
                   "thm1, thm2, thm3, prop_a, prop_b, prop_c, prop_d, or recip")
      ->required()
      ->check(CLI::IsMember(
          {"thm1", "thm2", "thm3", "prop_a", "prop_b", "prop_c", "prop_d", "recip"}));
  verify_cmd->add_option("--n-max", verify_opt.n_max, "Upper bound for n");
  verify_cmd->add_option("--k-max", verify_opt.k_max, "Upper bound for k");
  verify_cmd->add_option("--m-max", verify_opt.m_max, "Upper bound for m (order)");
  verify_cmd->add_option("--trials", verify_opt.trials, "Random trials for seeded sweeps");
  verify_cmd->add_option("--seed", verify_opt.seed, "Seed for the random sweeps");
  verify_cmd->add_option("--format", verify_format, "json, csv, or text")
      ->check(CLI::IsMember(formats));

  try {
    std::reverse(args.begin(), args.end());  // CLI11's vector overload consumes from the back
    app.parse(std::move(args));

    if (catalan_cmd->parsed()) {
      if (catalan_n < 0) throw std::invalid_argument("catalan: --n must be >= 0");
      json j;
      j["n"] = std::to_string(catalan_n);
      j["method"] = catalan_method;
      if (catalan_method == "det") {
        j["value"] = to_decimal(catalan_det(catalan_n));
      } else if (catalan_method == "mingantu") {
        j["value"] = to_decimal(catalan_mingantu(catalan_n));
      } else if (catalan_method == "closed") {
        j["value"] = to_decimal(catalan_closed(catalan_n));
      } else {
        const ExactInt det = catalan_det(catalan_n);
        const ExactInt closed = catalan_closed(catalan_n);
        j["det"] = to_decimal(det);
        bool agree = det == closed;
        if (catalan_n >= 1) {  // the convolution recurrence starts at n = 1
          const ExactInt mingantu = catalan_mingantu(catalan_n);
          j["mingantu"] = to_decimal(mingantu);
          agree = agree && mingantu == closed;
        }
        j["closed"] = to_decimal(closed);
        j["agree"] = agree;
      }
      out << detail::render_flat(j, catalan_format);
      return 0;
    }

    if (hessdet_cmd->parsed()) {
      const HessenbergMatrix h =
          HessenbergMatrix::from_dense(matrix_from_json(load_json_file(hessdet_input)));
      json j;
      j["engine"] = hessdet_engine;
      j["n"] = std::to_string(h.size());
      if (hessdet_engine == "recurrence") {
        j["det"] = to_decimal(det_hessenberg_recurrence(h));
      } else if (hessdet_engine == "bareiss") {
        j["det"] = to_decimal(det_bareiss(h.to_dense()));
      } else {
        const ExactInt by_recurrence = det_hessenberg_recurrence(h);
        const ExactInt by_bareiss = det_bareiss(h.to_dense());
        j["det_recurrence"] = to_decimal(by_recurrence);
        j["det_bareiss"] = to_decimal(by_bareiss);
        j["agree"] = by_recurrence == by_bareiss;
      }
      out << detail::render_flat(j, hessdet_format);
      return 0;
    }

    if (count_cmd->parsed()) {
      BoundaryPair bounds = opt_bounds_file->count() > 0
                                ? boundary_from_json(load_json_file(count_input))
                                : BoundaryPair(count_a, count_b);
      json j;
      if (count_method == "det") {
        j["method"] = "det";
        j["value"] = to_decimal(count_paths_det(bounds));
      } else if (count_method == "dp") {
        j["method"] = "dp";
        j["value"] = to_decimal(count_paths_dp(bounds));
      } else {
        const ExactInt by_det = count_paths_det(bounds);
        const ExactInt by_dp = count_paths_dp(bounds);
        j["det"] = to_decimal(by_det);
        j["dp"] = to_decimal(by_dp);
        j["agree"] = by_det == by_dp;
      }
      out << detail::render_flat(j, count_format);
      return 0;
    }

    if (dyck_cmd->parsed()) {
      json j;
      j["n"] = std::to_string(dyck_n);
      j["value"] = to_decimal(count_dyck(dyck_n));
      out << detail::render_flat(j, dyck_format);
      return 0;
    }

    if (recip_cmd->parsed()) {
      json j;
      if (opt_recip_n->count() > 0) {
        if (recip_order < 0) throw std::invalid_argument("series recip: --order is required");
        const std::size_t order = static_cast<std::size_t>(recip_order);
        const TruncatedSeries by_division = reciprocal(binomial_power(recip_n, order), order);
        const TruncatedSeries by_minors = reciprocal_via_minors(recip_n, order);
        j["n"] = std::to_string(recip_n);
        j["order"] = std::to_string(order);
        j["recip"] = detail::strings(by_division.coeffs());
        j["agree"] = by_division.coeffs() == by_minors.coeffs();
      } else {
        TruncatedSeries f = [&] {
          if (opt_recip_file->count() > 0) return series_from_json(load_json_file(recip_input));
          if (recip_coeffs.empty())
            throw std::invalid_argument("series recip: give one of --n, --coeffs, --input");
          std::vector<ExactInt> coeffs;
          coeffs.reserve(recip_coeffs.size());
          for (const std::string& c : recip_coeffs) coeffs.push_back(parse_decimal(c));
          return TruncatedSeries(std::move(coeffs));
        }();
        const std::size_t order =
            recip_order >= 0 ? static_cast<std::size_t>(recip_order) : f.order();
        j["coeffs"] = detail::strings(f.coeffs());
        j["order"] = std::to_string(order);
        j["recip"] = detail::strings(reciprocal(f, order).coeffs());
      }
      out << detail::render_flat(j, recip_format);
      return 0;
    }

    if (table_cmd->parsed()) {
      if (table_rows < 1) throw std::invalid_argument("table: --rows must be >= 1");
      if (table_highlight < 0) throw std::invalid_argument("table: --highlight must be >= 0");
      const PascalTable table = pascal_table(static_cast<std::size_t>(table_rows),
                                             static_cast<std::size_t>(table_highlight));
      if (table_format == "csv") {
        out << table.to_csv();
      } else if (table_format == "text") {
        out << table.to_text();
      } else {
        json j;
        j["rows"] = std::to_string(table.rows());
        j["cols"] = std::to_string(table.cols());
        j["highlight"] = std::to_string(table.highlight_col());
        json values = json::array();
        for (std::size_t r = 0; r < table.rows(); ++r) {
          json row = json::array();
          for (std::size_t c = 0; c < table.cols(); ++c) row.push_back(to_decimal(table.at(r, c)));
          values.push_back(std::move(row));
        }
        j["values"] = std::move(values);
        j["highlighted"] = detail::strings(table.highlighted());
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      const VerificationReport report = run_verification(verify_identity, verify_opt);
      out << detail::render_report(report, verify_format);
      return report.passed() ? 0 : 1;
    }

    err << "error: no subcommand given\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace catdet::cli
