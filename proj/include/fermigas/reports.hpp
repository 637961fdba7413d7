#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fermigas/asymptotics.hpp"
#include "fermigas/density.hpp"
#include "fermigas/edge.hpp"
#include "fermigas/moments.hpp"
#include "fermigas/mu_triangle.hpp"
#include "fermigas/shell.hpp"
#include "fermigas/transform.hpp"

namespace fermigas {

inline constexpr const char* kVersion = "0.1.0";

// Validated command configuration for the CLI surface.
struct RunConfig {
  enum class Command { moments, mu, density, transform, edge, verify };
  enum class Format { csv, json };

  Command command = Command::moments;
  int d = 1;
  int M = 0;
  int k_max = 8;
  // grid bounds; interpreted as radii, frequencies or edge coordinates
  // depending on the command. Negative defaults mean "derive from (d, M)".
  double grid_min = 0.0;
  double grid_max = -1.0;
  int samples = 65;
  Format format = Format::csv;
  std::optional<double> quad_tol;
  std::optional<std::string> output;
  bool quick = true;                 // verify only
  std::vector<int> verify_dims;      // verify only
};

// A rendered table: self-describing metadata plus typed cells. Exact
// rationals always travel as decimal strings of numerator and denominator,
// never as floats.
using Cell = std::variant<long long, double, std::string>;

struct Report {
  nlohmann::ordered_json meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

namespace detail {

inline std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.15g", v);
  return buffer;
}

inline nlohmann::ordered_json make_meta(const RunConfig& config, const char* command) {
  const ShellSpec spec(config.d, config.M);
  nlohmann::ordered_json meta;
  meta["d"] = config.d;
  meta["M"] = config.M;
  meta["N0"] = spec.particle_number().template convert_to<long long>();
  meta["two_m_tilde"] = spec.two_m_tilde();
  meta["command"] = command;
  meta["version"] = kVersion;
  return meta;
}

inline void push_rational(std::vector<Cell>& row, const Rational& value) {
  row.emplace_back(numerator(value).str());
  row.emplace_back(denominator(value).str());
  row.emplace_back(to_double(value));
}

inline QuadratureOptions quad_options(const RunConfig& config) {
  QuadratureOptions opt;
  if (config.quad_tol) {
    opt.abs_tol = *config.quad_tol;
    opt.rel_tol = *config.quad_tol;
  }
  return opt;
}

}  // namespace detail

inline Report build_moments_report(const RunConfig& config) {
  Report report;
  report.meta = detail::make_meta(config, "moments");
  report.columns = {"k", "numerator", "denominator", "value"};
  const ShellSpec spec(config.d, config.M);
  for (int k = 0; k <= config.k_max; ++k) {
    std::vector<Cell> row;
    row.emplace_back(static_cast<long long>(k));
    detail::push_rational(row, moment_closed_form(spec, k));
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline Report build_mu_report(const RunConfig& config) {
  Report report;
  report.meta = detail::make_meta(config, "mu");
  report.columns = {"k", "l", "numerator", "denominator", "value"};
  const MuTriangle triangle = build_mu_triangle(config.d, config.k_max);
  for (long long k = 0; k <= config.k_max; ++k) {
    for (long long l = 0; l <= k / 2; ++l) {
      std::vector<Cell> row;
      row.emplace_back(k);
      row.emplace_back(l);
      detail::push_rational(row, triangle.at(k, l));
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline Report build_density_report(const RunConfig& config) {
  Report report;
  report.meta = detail::make_meta(config, "density");
  report.columns = {"r", "rho", "rho_generating_fn", "rel_diff"};
  const ShellSpec spec(config.d, config.M);
  const ShellDensity density(spec);
  const double hi =
      config.grid_max > 0 ? config.grid_max : std::sqrt(2.0 * spec.m_tilde_real()) + 4.0;
  for (int i = 0; i < config.samples; ++i) {
    const double r = config.grid_min + (hi - config.grid_min) * i / (config.samples - 1.0);
    const double a = density(r);
    const double b = density_via_generating_function(spec, r);
    std::vector<Cell> row;
    row.emplace_back(r);
    row.emplace_back(a);
    row.emplace_back(b);
    row.emplace_back(std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}));
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline Report build_transform_report(const RunConfig& config) {
  Report report;
  report.meta = detail::make_meta(config, "transform");
  report.columns = {"k", "rho_hat", "ode_residual", "residual_scale"};
  const ShellSpec spec(config.d, config.M);
  const double hi = config.grid_max > 0 ? config.grid_max : 12.0;
  for (int i = 0; i < config.samples; ++i) {
    const double k = config.grid_min + (hi - config.grid_min) * i / (config.samples - 1.0);
    std::vector<Cell> row;
    row.emplace_back(k);
    row.emplace_back(rho_hat(spec, k).value);
    if (k > 0) {
      const Residual residual = rho_hat_ode_residual(spec, k);
      row.emplace_back(residual.value);
      row.emplace_back(residual.scale);
    } else {
      row.emplace_back(0.0);
      row.emplace_back(0.0);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline Report build_edge_report(const RunConfig& config) {
  Report report;
  report.meta = detail::make_meta(config, "edge");
  report.columns = {"s", "profile", "ode_residual", "residual_scale", "finite_m_gap"};
  const ShellSpec spec(config.d, config.M);
  const QuadratureOptions opt = detail::quad_options(config);
  const double lo = config.grid_max > config.grid_min ? config.grid_min : -5.0;
  const double hi = config.grid_max > config.grid_min ? config.grid_max : 3.0;
  for (int i = 0; i < config.samples; ++i) {
    const double s = lo + (hi - lo) * i / (config.samples - 1.0);
    const Residual residual = edge_ode_residual(config.d, s, opt);
    const EdgeConvergence conv = edge_convergence(spec, s, opt);
    std::vector<Cell> row;
    row.emplace_back(s);
    row.emplace_back(conv.limit_value);
    row.emplace_back(residual.value);
    row.emplace_back(residual.scale);
    row.emplace_back(conv.gap);
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline std::string render_csv(const Report& report) {
  std::string out;
  for (const auto& [key, value] : report.meta.items()) {
    out += "# " + key + "=";
    out += value.is_string() ? value.template get<std::string>() : value.dump();
    out += "\n";
  }
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    if (c) out += ",";
    out += report.columns[c];
  }
  out += "\n";
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      std::visit(
          [&out](const auto& cell) {
            using T = std::decay_t<decltype(cell)>;
            if constexpr (std::is_same_v<T, long long>)
              out += std::to_string(cell);
            else if constexpr (std::is_same_v<T, double>)
              out += detail::format_double(cell);
            else
              out += cell;
          },
          row[c]);
    }
    out += "\n";
  }
  return out;
}

inline std::string render_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["meta"] = report.meta;
  doc["data"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json item;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit([&](const auto& cell) { item[report.columns[c]] = cell; }, row[c]);
    }
    doc["data"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

inline std::string render_report(const Report& report, RunConfig::Format format) {
  return format == RunConfig::Format::json ? render_json(report) : render_csv(report);
}

}  // namespace fermigas
