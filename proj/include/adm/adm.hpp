#pragma once

#include "adm/adomian.hpp"
#include "adm/bench.hpp"
#include "adm/error.hpp"
#include "adm/exact_reference.hpp"
#include "adm/numeric_kernel.hpp"
#include "adm/solver.hpp"
