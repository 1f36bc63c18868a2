#pragma once

#include <string>

#include "fsd/core.hpp"

namespace fsd {

// Deterministic SVG Gantt chart: machine 1 lane above machine 2, one rect per
// nonempty operation, 8 horizontal units per time unit, fill keyed by delay
// class (light blue / light orange). Throws PreconditionError with the
// validator's findings if the schedule is infeasible.
std::string render_gantt(const Instance& inst, const Schedule& sched);

}  // namespace fsd
