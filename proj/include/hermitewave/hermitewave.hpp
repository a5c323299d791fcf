#pragma once

#include "error.hpp"
#include "laurent.hpp"
#include "hermite.hpp"
#include "quadrature.hpp"
#include "moments.hpp"
#include "linalg.hpp"
#include "solvers.hpp"
#include "models.hpp"
#include "profile.hpp"
#include "residual.hpp"
#include "io.hpp"
