#pragma once

#include "qcy/points/census.hpp"
#include "qcy/points/multilinear.hpp"
#include "qcy/points/strata.hpp"
