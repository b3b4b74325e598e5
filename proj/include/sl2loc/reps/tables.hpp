#pragma once

#include "sl2loc/reps/module.hpp"

namespace sl2loc::reps {

/// Closed-form action of a Lie algebra basis element on the family's local
/// model, with coefficients symbolic in (k, t, eta). The rule is obtained
/// by applying act_lie to basis symbols at a grid of numeric parameters and
/// interpolating (degree <= 2 per variable), then certified against extra
/// evaluation points off the grid. Throws if certification fails.
ActionRule action_table(Family family, Chart chart, Letter x);

}  // namespace sl2loc::reps
