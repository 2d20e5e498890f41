#pragma once

#include "qcy/cyclo/congruence.hpp"
#include "qcy/cyclo/cyc_int.hpp"
#include "qcy/cyclo/integer.hpp"
#include "qcy/cyclo/lattice.hpp"
#include "qcy/cyclo/root_scalar.hpp"
