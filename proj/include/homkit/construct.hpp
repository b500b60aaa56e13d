#pragma once

#include "homkit/construct/envelope.hpp"
#include "homkit/construct/module_oracles.hpp"
#include "homkit/construct/precover.hpp"
#include "homkit/construct/preenvelope.hpp"
