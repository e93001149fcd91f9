#pragma once

#include "dynirr/modp/mod_poly.hpp"
#include "dynirr/modp/modular.hpp"
#include "dynirr/modp/rabin.hpp"
#include "dynirr/modp/stability.hpp"
