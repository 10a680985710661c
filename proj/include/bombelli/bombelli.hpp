#pragma once

#include "bombelli/bignat.hpp"
#include "bombelli/extfloat.hpp"
#include "bombelli/isqrt.hpp"
#include "bombelli/baseline.hpp"
#include "bombelli/bench.hpp"
