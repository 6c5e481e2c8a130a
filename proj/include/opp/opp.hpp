#pragma once

// Umbrella include for the whole library.

#include "arith.hpp"
#include "bigint.hpp"
#include "laurent.hpp"
#include "overpartitions.hpp"
#include "rings.hpp"
#include "series.hpp"
#include "special_series.hpp"
#include "verify.hpp"
