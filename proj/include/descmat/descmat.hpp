#pragma once

#include "descmat/checked.hpp"
#include "descmat/enumerate.hpp"
#include "descmat/permutation.hpp"
#include "descmat/phi.hpp"
#include "descmat/polynomial.hpp"
#include "descmat/sym_matrix.hpp"
#include "descmat/verify.hpp"
