#pragma once

// Umbrella header for the volterra library.

#include "gammakit.hpp"
#include "quadrature.hpp"
#include "functions.hpp"
#include "means.hpp"
#include "oracle.hpp"
#include "ineqlab.hpp"
#include "suite.hpp"
