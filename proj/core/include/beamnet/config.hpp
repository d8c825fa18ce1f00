#ifndef BEAMNET_CONFIG_HPP
#define BEAMNET_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace beamnet {

/// Simulation parameters shared by every phase of a trial.
///
/// Field names double as config-file and CLI flag keys, so changes here
/// ripple into the external interface.
struct WorldConfig {
  std::uint32_t n = 120;          // node count
  double field_size = 10.0;       // side of the square deployment field
  double radio_range = 1.0;       // omnidirectional radio range
  int gradient = 4;               // max hopcount from a region head
  double alpha = 2.0;             // path-loss exponent (>= 1) for beam range
  int elements_min = 1;           // antenna elements, lower bound
  int elements_max = 16;          // antenna elements, upper bound
  double epsilon = 0.05;          // centroid candidate distance threshold
  double delta = 1e-6;            // consensus convergence threshold
  double sweep_step = 0.098174770424681035;  // tau / 64
  std::uint64_t seed = 1;         // master RNG seed

  /// Number of discrete azimuths in a beam sweep: round(tau / sweep_step).
  int sweep_steps() const;

  /// Throws std::invalid_argument naming the offending key when a value is
  /// out of range. Checks, among others, that sweep_step divides tau to
  /// within 1e-6 and that elements_min <= elements_max.
  void validate() const;

  /// One `key = value` line per field, doubles at full precision.
  std::string to_key_values() const;

  /// Applies one `key = value` assignment. Unknown keys and unparsable
  /// values throw std::invalid_argument. Blank and '#' lines are ignored
  /// and return false.
  bool apply_key_value(const std::string& line);

  /// Reads a whole key = value stream via apply_key_value.
  static WorldConfig from_stream(std::istream& in);

  bool operator==(const WorldConfig&) const = default;
};

}  // namespace beamnet

#endif  // BEAMNET_CONFIG_HPP
