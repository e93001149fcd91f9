#pragma once

#include "dynirr/exactalg/bigint.hpp"
#include "dynirr/exactalg/division.hpp"
#include "dynirr/exactalg/poly.hpp"
#include "dynirr/exactalg/res_decomp.hpp"
#include "dynirr/exactalg/resultant.hpp"
#include "dynirr/exactalg/squarefree.hpp"
