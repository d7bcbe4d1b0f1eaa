#pragma once

#include "staircase/collision.hpp"
#include "staircase/direction.hpp"
#include "staircase/errors.hpp"
#include "staircase/exact.hpp"
#include "staircase/lattice.hpp"
#include "staircase/limit_ideal.hpp"
#include "staircase/ops.hpp"
#include "staircase/postulation.hpp"
#include "staircase/prime_field.hpp"
#include "staircase/report.hpp"
#include "staircase/serialize.hpp"
