#pragma once

#include "eph/error.hpp"
#include "eph/scalar.hpp"
#include "eph/hypercomplex.hpp"
#include "eph/mat2.hpp"
#include "eph/sl2.hpp"
#include "eph/homogeneous.hpp"
#include "eph/dualalg.hpp"
#include "eph/induced.hpp"
#include "eph/ladder.hpp"
#include "eph/orbitgen.hpp"
#include "eph/random.hpp"
#include "eph/verify.hpp"
