#pragma once

#include "hirreg/arith.hpp"
#include "hirreg/bounds.hpp"
#include "hirreg/construct.hpp"
#include "hirreg/covering.hpp"
#include "hirreg/error.hpp"
#include "hirreg/grid.hpp"
#include "hirreg/io.hpp"
#include "hirreg/labeling.hpp"
#include "hirreg/report.hpp"
#include "hirreg/search.hpp"
#include "hirreg/verify.hpp"
