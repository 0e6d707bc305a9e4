#pragma once

// Umbrella header.

#include "ampli/combinatorics.hpp"
#include "ampli/crossing.hpp"
#include "ampli/errors.hpp"
#include "ampli/json_io.hpp"
#include "ampli/matrix.hpp"
#include "ampli/membership.hpp"
#include "ampli/positivity.hpp"
#include "ampli/prng.hpp"
#include "ampli/rational.hpp"
#include "ampli/render.hpp"
#include "ampli/twistor.hpp"
#include "ampli/winding.hpp"
