#pragma once

#include "squeeze/covariant.hpp"
#include "squeeze/entanglement.hpp"
#include "squeeze/errors.hpp"
#include "squeeze/format.hpp"
#include "squeeze/numerics/density_kernel.hpp"
#include "squeeze/numerics/hermite.hpp"
#include "squeeze/numerics/quadrature.hpp"
#include "squeeze/oscillator.hpp"
#include "squeeze/parton.hpp"
