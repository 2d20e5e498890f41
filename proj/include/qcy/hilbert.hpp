#pragma once

#include "qcy/hilbert/brute_force.hpp"
#include "qcy/hilbert/series.hpp"
