#pragma once

#include "ujl/asymptotics.hpp"
#include "ujl/errors.hpp"
#include "ujl/invariants.hpp"
#include "ujl/lattice.hpp"
#include "ujl/matrix.hpp"
#include "ujl/quadrature.hpp"
#include "ujl/spectra.hpp"
#include "ujl/summation.hpp"
#include "ujl/verify.hpp"
