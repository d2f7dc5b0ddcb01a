#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

/// Scenario file diagnostic. line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

struct LayerSpec {
  std::string material;
  double thickness = 0.0;  // units of c / Omega

  bool operator==(const LayerSpec&) const = default;
};

struct MirrorSpec {
  std::vector<LayerSpec> layers;  // gap side first
  std::string substrate;

  bool operator==(const MirrorSpec&) const = default;
};

enum class GridScale { Log, Lin };

struct DistanceGrid {
  double d_min = 1.0;
  double d_max = 1.0;
  int points = 1;
  GridScale scale = GridScale::Log;

  /// d_min .. d_max inclusive; a single point gives d_min.
  std::vector<double> distances() const;
  bool operator==(const DistanceGrid&) const = default;
};

struct Scenario {
  std::map<std::string, ResponseModel> materials;
  MirrorSpec mirror1;
  MirrorSpec mirror2;
  std::optional<std::string> gap;  // vacuum when absent
  double temperature = 0.0;        // tau = k_B T / (hbar Omega)
  std::vector<double> temperatures;  // a temperature family; temperature is its first entry
  std::optional<DistanceGrid> sweep;

  MirrorStack stack1() const;
  MirrorStack stack2() const;
  ResponseModel gap_medium() const;
  /// temperatures when given, else {temperature}.
  std::vector<double> temperature_list() const;

  bool operator==(const Scenario&) const = default;
};

/// Parses the scenario format:
///
///   [material ID]   eps_strength / eps_resonance / mu_strength / mu_resonance = FLOAT
///                   or ideal = electric|magnetic|vacuum
///   [mirror 1], [mirror 2]
///                   layer = ID THICKNESS (repeatable, gap side first), substrate = ID
///   [gap]           medium = ID
///   [run]           T = FLOAT, temperatures = FLOAT..., d = MIN MAX POINTS log|lin
///
/// '#' starts a comment. Throws ParseError with the position of the offending token.
Scenario parse_scenario(std::string_view text);

/// Canonical text: materials sorted by id, fixed key order, shortest round-trip floats.
std::string serialize_scenario(const Scenario& scenario);

/// Passivity diagnostics. Lorentz-Drude and ideal models are passive by construction,
/// so this is empty for every scenario the parser accepts.
std::vector<std::string> validate_passivity(const Scenario& scenario);

/// Named parameter sets: fig1a..fig1d, fig2 (fig1d over a temperature family),
/// fig3a..fig3d. Throws std::invalid_argument for an unknown name.
Scenario preset_scenario(std::string_view name);
const std::vector<std::string>& preset_names();

}  // namespace casimir
