#pragma once

// Umbrella header for the hyperdec library.

#include "hyperdec/calculus.hpp"
#include "hyperdec/decimals.hpp"
#include "hyperdec/decompose.hpp"
#include "hyperdec/error.hpp"
#include "hyperdec/expr.hpp"
#include "hyperdec/exppoly.hpp"
#include "hyperdec/hyperint.hpp"
#include "hyperdec/hyperreal.hpp"
#include "hyperdec/lightstone.hpp"
#include "hyperdec/polynomial.hpp"
#include "hyperdec/rational.hpp"
