// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_BASELINE_HPP
#define SCNSIM_BASELINE_HPP

#include "scnsim/matching.hpp"
#include "scnsim/scenario.hpp"

namespace scnsim {

/// Context-unaware reference association: users are processed in descending
/// order of their best in-coverage pico SINR and greedily assigned to the
/// strongest pico that still has a free slot and clears the minimum SINR;
/// everyone else stays on the macro. Quota enforcement can be switched off in
/// the configuration.
Matching max_sinr_assignment(const Scenario& scenario);

} // namespace scnsim

#endif
