#pragma once

#include "homkit/modules/finite.hpp"
#include "homkit/modules/fp_module.hpp"
#include "homkit/modules/hom.hpp"
#include "homkit/modules/hull.hpp"
#include "homkit/modules/map_system.hpp"
#include "homkit/modules/normalize.hpp"
#include "homkit/modules/ops.hpp"
