// Convenience umbrella header.

#pragma once

#include "cqed/coupling.hpp"
#include "cqed/field_grid.hpp"
#include "cqed/jaynes_cummings.hpp"
#include "cqed/laser.hpp"
#include "cqed/lossy.hpp"
#include "cqed/photon_stats.hpp"
#include "cqed/purcell.hpp"
#include "cqed/qdot.hpp"
#include "cqed/units.hpp"
