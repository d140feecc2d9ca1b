#pragma once

#include "gausslucas/geometry.hpp"
#include "gausslucas/harness.hpp"
#include "gausslucas/parser.hpp"
#include "gausslucas/poly.hpp"
#include "gausslucas/random.hpp"
#include "gausslucas/roots.hpp"
#include "gausslucas/stability.hpp"
