#pragma once

#include "homkit/exactalg/howell.hpp"
#include "homkit/exactalg/integer.hpp"
#include "homkit/exactalg/matrix.hpp"
#include "homkit/exactalg/ring.hpp"
#include "homkit/exactalg/smith.hpp"
#include "homkit/exactalg/solve.hpp"
