#pragma once

#include "decider.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "integer_matrix.hpp"
#include "polytrope.hpp"
#include "rational.hpp"
#include "runner.hpp"
#include "stern_brocot.hpp"
#include "sweep.hpp"
#include "zonolab/configuration.hpp"
#include "zonolab/constructions.hpp"
#include "zonolab/lattice.hpp"
#include "zonolab/lvp.hpp"
#include "zonolab/serialization.hpp"
