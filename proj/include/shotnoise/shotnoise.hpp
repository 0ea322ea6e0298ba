#pragma once

// Renewal shot-noise simulation with regularly varying response functions of
// index -1/2, the Gaussian limit law X(u) = B(1-u) + D(u) on sublinearly
// scaled time grids, and the verification experiments tying them together.

#include "shotnoise/accumulator.hpp"
#include "shotnoise/cli.hpp"
#include "shotnoise/config.hpp"
#include "shotnoise/diagnostics.hpp"
#include "shotnoise/io.hpp"
#include "shotnoise/jump_laws.hpp"
#include "shotnoise/limit_law.hpp"
#include "shotnoise/parallel.hpp"
#include "shotnoise/quadrature.hpp"
#include "shotnoise/renewal.hpp"
#include "shotnoise/report_json.hpp"
#include "shotnoise/response_kernel.hpp"
#include "shotnoise/rng.hpp"
#include "shotnoise/special_functions.hpp"
#include "shotnoise/verifier.hpp"
