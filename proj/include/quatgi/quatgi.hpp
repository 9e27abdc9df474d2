#pragma once

#include "determinant.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "generalized_inverse.hpp"
#include "index_subset.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "quaternion.hpp"
#include "rational.hpp"
#include "solvers.hpp"
#include "verification.hpp"
#include "wdrazin.hpp"
