#pragma once

// Umbrella include for the whole library.

#include "scmap/convergence.hpp"
#include "scmap/grid.hpp"
#include "scmap/potentials.hpp"
#include "scmap/quadrature.hpp"
#include "scmap/records.hpp"
#include "scmap/root_find.hpp"
#include "scmap/spectra.hpp"
#include "scmap/susy.hpp"
#include "scmap/transform.hpp"
#include "scmap/tridiagonal.hpp"
