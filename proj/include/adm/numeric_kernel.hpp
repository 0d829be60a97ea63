#pragma once

#include "adm/numeric/hp_real.hpp"
#include "adm/numeric/rational.hpp"
#include "adm/numeric/time_polynomial.hpp"
