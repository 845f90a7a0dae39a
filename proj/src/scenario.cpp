// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#include "scnsim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "scnsim/channel.hpp"
#include "scnsim/rng.hpp"

namespace scnsim {

namespace {

constexpr double kmh_to_mps = 1000.0 / 3600.0;

void place_in_disk(Rng& rng, double radius, double& x, double& y) {
    const double r = radius * std::sqrt(rng.unit());
    const double phi = 2.0 * std::numbers::pi * rng.unit();
    x = r * std::cos(phi);
    y = r * std::sin(phi);
}

DeviceClass draw_device(Rng& rng, const std::array<double, 3>& mix) {
    const double u = rng.unit();
    if (u < mix[0])
        return DeviceClass::Laptop;
    if (u < mix[0] + mix[1])
        return DeviceClass::Tablet;
    return DeviceClass::Smartphone;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

const char* device_class_name(DeviceClass d) {
    switch (d) {
    case DeviceClass::Laptop:
        return "laptop";
    case DeviceClass::Tablet:
        return "tablet";
    case DeviceClass::Smartphone:
        return "smartphone";
    }
    return "?";
}

double screen_size(DeviceClass d) {
    switch (d) {
    case DeviceClass::Laptop:
        return 17.0;
    case DeviceClass::Tablet:
        return 10.0;
    case DeviceClass::Smartphone:
        return 4.5;
    }
    throw std::invalid_argument("screen_size: unknown device class");
}

double target_rate(DeviceClass d) {
    switch (d) {
    case DeviceClass::Laptop:
        return 1000e3;
    case DeviceClass::Tablet:
        return 600e3;
    case DeviceClass::Smartphone:
        return 400e3;
    }
    throw std::invalid_argument("target_rate: unknown device class");
}

const ShapeParams& shape_for(const Config& config, DeviceClass d) {
    switch (d) {
    case DeviceClass::Laptop:
        return config.laptop_shape;
    case DeviceClass::Tablet:
        return config.tablet_shape;
    default:
        return config.smartphone_shape;
    }
}

double Scenario::distance(int user, int cell) const {
    const double dx = users[user].x - cells[cell].x;
    const double dy = users[user].y - cells[cell].y;
    return std::hypot(dx, dy);
}

void Scenario::validate() const {
    if (cells.empty() || cells[0].tier != Tier::Macro)
        throw std::runtime_error("scenario: cells[0] must be the macro cell");
    for (const Cell& c : cells) {
        if (c.coverage_radius <= 0 || c.hf_radius <= 0 || c.hf_radius >= c.coverage_radius)
            throw std::runtime_error("scenario: cell radii must satisfy 0 < r < R");
        if (c.quota < 1)
            throw std::runtime_error("scenario: cell quota must be >= 1");
        if (std::hypot(c.x, c.y) > config.macro_radius + 1e-9)
            throw std::runtime_error("scenario: cell outside the macro disk");
    }
    for (const UserEquipment& u : users) {
        if (std::hypot(u.x, u.y) > config.macro_radius + 1e-9)
            throw std::runtime_error("scenario: user outside the macro disk");
        if (u.speed <= 0 || u.speed < config.speed_range.lo * kmh_to_mps - 1e-9 ||
            u.speed > config.speed_range.hi * kmh_to_mps + 1e-9)
            throw std::runtime_error("scenario: user speed outside configured range");
        if (u.tau < config.tau_range.lo - 1e-12 || u.tau > config.tau_range.hi + 1e-12)
            throw std::runtime_error("scenario: user urgency outside configured range");
        if (u.shape.alpha <= 0 || u.shape.beta <= 0 || u.shape.lambda <= 0)
            throw std::runtime_error("scenario: user shape parameters must be positive");
    }
    if (gains.size() != users.size() * cells.size() || thetas.size() != gains.size())
        throw std::runtime_error("scenario: link matrices must be num_users x num_cells");
    for (double g : gains)
        if (!(g > 0))
            throw std::runtime_error("scenario: channel gains must be positive");
}

Scenario generate_scenario(const Config& config, std::uint64_t seed) {
    config.validate();
    Scenario s;
    s.config = config;
    Rng rng(seed);

    const int n_cells = config.num_picocells + 1;
    s.cells.reserve(n_cells);

    Cell macro;
    macro.id = 0;
    macro.tier = Tier::Macro;
    macro.power_dbm = config.macro_power;
    macro.coverage_radius = config.macro_radius;
    macro.hf_radius = config.hf_ratio * config.macro_radius;
    macro.quota = std::max(1, config.num_users); // never binding
    s.cells.push_back(macro);

    for (int p = 0; p < config.num_picocells; ++p) {
        Cell c;
        c.id = p + 1;
        c.tier = Tier::Pico;
        place_in_disk(rng, config.macro_radius, c.x, c.y);
        c.power_dbm = config.pico_power;
        c.coverage_radius = config.pico_coverage_radius;
        c.hf_radius = config.hf_ratio * config.pico_coverage_radius;
        c.quota = config.quota;
        s.cells.push_back(c);
    }

    s.users.reserve(config.num_users);
    for (int i = 0; i < config.num_users; ++i) {
        UserEquipment u;
        u.id = i;
        place_in_disk(rng, config.macro_radius, u.x, u.y);
        u.speed = rng.uniform(config.speed_range.lo, config.speed_range.hi) * kmh_to_mps;
        u.tau = rng.uniform(config.tau_range.lo, config.tau_range.hi);
        u.device = draw_device(rng, config.device_mix);
        u.screen = screen_size(u.device);
        u.target_rate = target_rate(u.device);
        u.shape = shape_for(config, u.device);
        s.users.push_back(u);
    }

    const std::size_t links = s.users.size() * s.cells.size();
    s.thetas.resize(links);
    s.gains.resize(links);
    for (std::size_t l = 0; l < links; ++l)
        s.thetas[l] = rng.uniform(-std::numbers::pi / 2, std::numbers::pi / 2);
    for (int i = 0; i < s.num_users(); ++i) {
        for (int j = 0; j < s.num_cells(); ++j) {
            const double pl =
                path_gain(s.distance(i, j), config.pathloss_exponent, config.pathloss_ref_gain);
            s.gains[static_cast<std::size_t>(i) * s.cells.size() + j] =
                pl * sample_fading(rng, config.fading);
        }
    }

    s.validate();
    return s;
}

std::string serialize_scenario_csv(const Scenario& s) {
    std::string out;
    out += "#cells\nid,tier,x,y,power_dbm,coverage_radius,hf_radius,quota\n";
    for (const Cell& c : s.cells) {
        out += std::to_string(c.id) + ',' + (c.tier == Tier::Macro ? "macro" : "pico") + ',' +
               format_double(c.x) + ',' + format_double(c.y) + ',' + format_double(c.power_dbm) +
               ',' + format_double(c.coverage_radius) + ',' + format_double(c.hf_radius) + ',' +
               std::to_string(c.quota) + '\n';
    }
    out += "#users\nid,x,y,speed_mps,device,screen_in,target_rate_bps,tau_ms,alpha,beta,lambda\n";
    for (const UserEquipment& u : s.users) {
        out += std::to_string(u.id) + ',' + format_double(u.x) + ',' + format_double(u.y) + ',' +
               format_double(u.speed) + ',' + device_class_name(u.device) + ',' +
               format_double(u.screen) + ',' + format_double(u.target_rate) + ',' +
               format_double(u.tau) + ',' + format_double(u.shape.alpha) + ',' +
               format_double(u.shape.beta) + ',' + format_double(u.shape.lambda) + '\n';
    }
    out += "#links\nuser,cell,gain,theta_rad\n";
    for (int i = 0; i < s.num_users(); ++i)
        for (int j = 0; j < s.num_cells(); ++j)
            out += std::to_string(i) + ',' + std::to_string(j) + ',' +
                   format_double(s.gain(i, j)) + ',' + format_double(s.theta(i, j)) + '\n';
    return out;
}

} // namespace scnsim
