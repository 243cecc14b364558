#pragma once

#include "pga2d/elements.hpp"
#include "pga2d/errors.hpp"
#include "pga2d/geometry.hpp"
#include "pga2d/isometry.hpp"
#include "pga2d/metric.hpp"
#include "pga2d/multivector.hpp"
