#pragma once

// Umbrella header for the electoral simulation library.

#include "ballots.hpp"
#include "candidates.hpp"
#include "election_result.hpp"
#include "electorate.hpp"
#include "fractional.hpp"
#include "metrics.hpp"
#include "point.hpp"
#include "registry.hpp"
#include "reporting.hpp"
#include "rng.hpp"
#include "scenario.hpp"
#include "simulation.hpp"
#include "spatial.hpp"
#include "systems.hpp"

namespace electoral {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace electoral
