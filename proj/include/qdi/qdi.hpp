//! \file qdi.hpp
//! \brief Umbrella header for the dual-rail QDI synthesis toolkit.

#pragma once

#include "qdi/analysis.hpp"
#include "qdi/boolean_function.hpp"
#include "qdi/cli.hpp"
#include "qdi/cover.hpp"
#include "qdi/dual_rail.hpp"
#include "qdi/factored_expr.hpp"
#include "qdi/fixtures.hpp"
#include "qdi/netlist.hpp"
#include "qdi/netlist_json.hpp"
#include "qdi/report.hpp"
#include "qdi/sim.hpp"
#include "qdi/synth.hpp"
