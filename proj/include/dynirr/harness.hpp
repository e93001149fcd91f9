#pragma once

#include "dynirr/harness/bound_check.hpp"
#include "dynirr/harness/parse.hpp"
#include "dynirr/harness/report.hpp"
#include "dynirr/harness/scan.hpp"
#include "dynirr/harness/verify.hpp"
