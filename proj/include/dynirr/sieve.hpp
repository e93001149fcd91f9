#pragma once

#include "dynirr/sieve/character_sums.hpp"
#include "dynirr/sieve/primes.hpp"
#include "dynirr/sieve/selberg.hpp"
#include "dynirr/sieve/window_sets.hpp"
