// Umbrella header for the whole library.

#pragma once

#include "hstar/bernoulli.hpp"
#include "hstar/bigint.hpp"
#include "hstar/caps.hpp"
#include "hstar/codes.hpp"
#include "hstar/cyclotomic.hpp"
#include "hstar/error.hpp"
#include "hstar/finite_field.hpp"
#include "hstar/int_matrix.hpp"
#include "hstar/json_io.hpp"
#include "hstar/lattice.hpp"
#include "hstar/torus.hpp"
#include "hstar/verify.hpp"
