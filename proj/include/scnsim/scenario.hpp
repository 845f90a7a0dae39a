// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_SCENARIO_HPP
#define SCNSIM_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scnsim/config.hpp"

namespace scnsim {

enum class Tier { Macro, Pico };

enum class DeviceClass : int { Laptop = 0, Tablet = 1, Smartphone = 2 };

struct Cell {
    int id = 0;
    Tier tier = Tier::Pico;
    double x = 0.0; // m
    double y = 0.0; // m
    double power_dbm = 0.0;
    double coverage_radius = 0.0; // m
    double hf_radius = 0.0;       // m, < coverage_radius
    int quota = 1;
};

struct UserEquipment {
    int id = 0;
    double x = 0.0; // m
    double y = 0.0; // m
    double speed = 0.0;   // m/s
    DeviceClass device = DeviceClass::Smartphone;
    double screen = 0.0;      // inches
    double target_rate = 0.0; // bps
    double tau = 0.0;         // ms
    ShapeParams shape;
};

/// One immutable network realization: cells[0] is the macro cell, followed by
/// the picocells. Channel gains and crossing angles are sampled once per
/// (user, cell) pair and stay fixed for the lifetime of the scenario.
struct Scenario {
    Config config;
    std::vector<Cell> cells;
    std::vector<UserEquipment> users;
    std::vector<double> gains;  // num_users x num_cells, row-major, linear
    std::vector<double> thetas; // num_users x num_cells, row-major, radians

    int num_cells() const { return static_cast<int>(cells.size()); }
    int num_users() const { return static_cast<int>(users.size()); }

    double gain(int user, int cell) const { return gains[static_cast<std::size_t>(user) * cells.size() + cell]; }
    double theta(int user, int cell) const { return thetas[static_cast<std::size_t>(user) * cells.size() + cell]; }

    double distance(int user, int cell) const;

    /// Throws std::runtime_error on a violated structural invariant.
    void validate() const;
};

/// Builds a reproducible realization: picocells and users placed uniformly in
/// the macro disk, speeds and urgency sampled uniformly from their configured
/// ranges, one crossing angle and one fading draw per (user, cell) pair.
Scenario generate_scenario(const Config& config, std::uint64_t seed);

/// Deterministic CSV rendering with sections for cells, users and per-link
/// gain/angle samples; identical (config, seed) pairs serialize identically.
std::string serialize_scenario_csv(const Scenario& scenario);

const char* device_class_name(DeviceClass d);
const ShapeParams& shape_for(const Config& config, DeviceClass d);

/// Screen diagonal in inches for a device class.
double screen_size(DeviceClass d);

/// Nominal downlink demand in bps for a device class.
double target_rate(DeviceClass d);

} // namespace scnsim

#endif
