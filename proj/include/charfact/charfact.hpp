#pragma once

// Umbrella header.

#include "characters.hpp"
#include "cyclotomic.hpp"
#include "factorizations.hpp"
#include "laurent_poly.hpp"
#include "partition.hpp"
#include "polyring.hpp"
#include "sweep.hpp"
#include "tuples.hpp"
