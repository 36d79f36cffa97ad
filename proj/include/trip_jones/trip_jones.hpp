#pragma once

#include "trip_jones/bracket_oracle.hpp"
#include "trip_jones/errors.hpp"
#include "trip_jones/gauss_code.hpp"
#include "trip_jones/gf2_matrix.hpp"
#include "trip_jones/jones_engine.hpp"
#include "trip_jones/knot_table.hpp"
#include "trip_jones/laurent_poly.hpp"
#include "trip_jones/trip_matrix.hpp"
