#ifndef RIORDAN_RIORDAN_HPP
#define RIORDAN_RIORDAN_HPP

// Umbrella header: exact truncated-power-series arithmetic, the
// Riordan / Double Riordan / k-Riordan groups, the monomorphisms
// between them, and the expression front end.

#include "riordan/errors.hpp"
#include "riordan/k_riordan.hpp"
#include "riordan/morphisms.hpp"
#include "riordan/parse.hpp"
#include "riordan/random_arrays.hpp"
#include "riordan/rational.hpp"
#include "riordan/render.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"
#include "riordan/triangular_matrix.hpp"

#endif  // RIORDAN_RIORDAN_HPP
