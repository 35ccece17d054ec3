#pragma once

#include "decomposition.hpp"
#include "dimensions.hpp"
#include "error.hpp"
#include "number_theory.hpp"
#include "parameters.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "specht_oracle.hpp"
#include "verification.hpp"
