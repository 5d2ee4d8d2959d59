#pragma once

// Umbrella header for the divbounds library: symmetric divergence measures
// between finite discrete distributions, tight closed-form bounds on them at
// fixed total variation distance, brute-force verification of those bounds,
// and redundancy-based L1 bounds for uniquely decodable source codes.

#include "divbounds/bounds.hpp"
#include "divbounds/coding.hpp"
#include "divbounds/distribution.hpp"
#include "divbounds/errors.hpp"
#include "divbounds/fdivergence.hpp"
#include "divbounds/oracle.hpp"
#include "divbounds/optimize.hpp"
