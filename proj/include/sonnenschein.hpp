#pragma once

#include "sonnenschein/errors.hpp"
#include "sonnenschein/exact/combinatorics.hpp"
#include "sonnenschein/exact/complex_rational.hpp"
#include "sonnenschein/exact/pi_graded.hpp"
#include "sonnenschein/exact/rational.hpp"
#include "sonnenschein/field.hpp"
#include "sonnenschein/karamata.hpp"
#include "sonnenschein/matrix.hpp"
#include "sonnenschein/series.hpp"
#include "sonnenschein/sin2.hpp"
#include "sonnenschein/verify.hpp"
