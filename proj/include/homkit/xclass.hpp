#pragma once

#include "homkit/xclass/universe.hpp"
#include "homkit/xclass/xclass.hpp"
