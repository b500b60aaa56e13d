#pragma once

#include "homkit/complexes/complex.hpp"
#include "homkit/complexes/cone.hpp"
#include "homkit/complexes/exactness.hpp"
#include "homkit/complexes/hom_complex.hpp"
#include "homkit/complexes/solvers.hpp"
#include "homkit/complexes/subcomplex.hpp"
