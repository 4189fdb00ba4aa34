#include "flapsim/units.hpp"

#include <numbers>
#include <unordered_map>

namespace flapsim::units {

namespace {

const std::unordered_map<std::string, double>& table(Dimension dim) {
    static const std::unordered_map<std::string, double> dimensionless{{"", 1.0}, {"%", 0.01}};
    static const std::unordered_map<std::string, double> length{
        {"", 1.0}, {"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}};
    static const std::unordered_map<std::string, double> mass{
        {"", 1.0}, {"kg", 1.0}, {"g", 1e-3}, {"mg", 1e-6}, {"ug", 1e-9}};
    static const std::unordered_map<std::string, double> frequency{
        {"", 1.0}, {"Hz", 1.0}, {"kHz", 1e3}};
    static const std::unordered_map<std::string, double> angular_rate{{"", 1.0}, {"rad/s", 1.0}};
    static const std::unordered_map<std::string, double> angle{
        {"", 1.0}, {"rad", 1.0}, {"deg", std::numbers::pi / 180.0}};
    static const std::unordered_map<std::string, double> force{
        {"", 1.0}, {"N", 1.0}, {"mN", 1e-3}, {"uN", 1e-6}};
    static const std::unordered_map<std::string, double> torque{
        {"", 1.0}, {"Nm", 1.0}, {"mNm", 1e-3}, {"uNm", 1e-6}, {"nNm", 1e-9}};
    static const std::unordered_map<std::string, double> damping{{"", 1.0}, {"Ns/m", 1.0}};
    static const std::unordered_map<std::string, double> pressure{
        {"", 1.0}, {"Pa", 1.0}, {"kPa", 1e3}, {"MPa", 1e6}, {"GPa", 1e9}};
    switch (dim) {
        case Dimension::dimensionless: return dimensionless;
        case Dimension::length: return length;
        case Dimension::mass: return mass;
        case Dimension::frequency: return frequency;
        case Dimension::angular_rate: return angular_rate;
        case Dimension::angle: return angle;
        case Dimension::force: return force;
        case Dimension::torque: return torque;
        case Dimension::damping: return damping;
        case Dimension::pressure: return pressure;
    }
    return dimensionless;
}

}  // namespace

std::optional<double> factor(Dimension dim, const std::string& unit) {
    const auto& t = table(dim);
    const auto it = t.find(unit);
    if (it == t.end()) return std::nullopt;
    return it->second;
}

std::string si_name(Dimension dim) {
    switch (dim) {
        case Dimension::dimensionless: return "";
        case Dimension::length: return "m";
        case Dimension::mass: return "kg";
        case Dimension::frequency: return "Hz";
        case Dimension::angular_rate: return "rad/s";
        case Dimension::angle: return "rad";
        case Dimension::force: return "N";
        case Dimension::torque: return "N m/rad";
        case Dimension::damping: return "N s/m";
        case Dimension::pressure: return "Pa";
    }
    return "";
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace flapsim::units
