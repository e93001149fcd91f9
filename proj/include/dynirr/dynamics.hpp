#pragma once

#include "dynirr/dynamics/classify.hpp"
#include "dynirr/dynamics/orbit.hpp"
#include "dynirr/dynamics/square_products.hpp"
