#pragma once

#include "homkit/lifting/complex_checks.hpp"
#include "homkit/lifting/dg.hpp"
#include "homkit/lifting/lemmas.hpp"
#include "homkit/lifting/module_checks.hpp"
#include "homkit/lifting/search.hpp"
#include "homkit/lifting/verdict.hpp"
