#pragma once

#include <optional>
#include <string>

namespace flapsim::units {

/// Physical dimension a config value is checked against.
enum class Dimension {
    dimensionless,
    length,
    mass,
    frequency,
    angular_rate,
    angle,
    force,
    torque,
    damping,
    pressure,
};

/// Conversion factor to SI base units for `unit` read as `dim`, or nullopt
/// when the suffix does not belong to that dimension. The empty suffix means
/// the value is already in SI base units (radians for angles).
std::optional<double> factor(Dimension dim, const std::string& unit);

/// Canonical SI unit spelling for messages ("m", "kg", "N m/rad", ...).
std::string si_name(Dimension dim);

double deg_to_rad(double deg);
double rad_to_deg(double rad);

}  // namespace flapsim::units
