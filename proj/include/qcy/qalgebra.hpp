#pragma once

#include "qcy/qalgebra/automorphism.hpp"
#include "qcy/qalgebra/charts.hpp"
#include "qcy/qalgebra/skew_poly.hpp"
#include "qcy/qalgebra/spec.hpp"
