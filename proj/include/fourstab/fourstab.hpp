#pragma once

// Umbrella header for the fourstab library.

#include "fourstab/arith.hpp"
#include "fourstab/errors.hpp"
#include "fourstab/expr.hpp"
#include "fourstab/forms.hpp"
#include "fourstab/json_io.hpp"
#include "fourstab/localize.hpp"
#include "fourstab/manifolds.hpp"
#include "fourstab/pin2.hpp"
