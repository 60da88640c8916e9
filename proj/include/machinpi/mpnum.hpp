#pragma once

// Umbrella header for the arbitrary-precision number types.
#include "machinpi/bigint.hpp"
#include "machinpi/errors.hpp"
#include "machinpi/mpreal.hpp"
#include "machinpi/rational.hpp"
