#pragma once

#include "rational.hpp"
#include "polynomial.hpp"
#include "roots.hpp"
#include "quadrature.hpp"
#include "trig_series.hpp"
#include "piecewise.hpp"
#include "waves.hpp"
#include "constants.hpp"
#include "interpolation.hpp"
#include "verify.hpp"
#include "serialize.hpp"
#include "version.hpp"
