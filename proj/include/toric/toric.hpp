#pragma once

#include "toric/capacities.hpp"
#include "toric/domain.hpp"
#include "toric/domain_io.hpp"
#include "toric/ech/enumerate.hpp"
#include "toric/ech/orbit.hpp"
#include "toric/ech/relation.hpp"
#include "toric/ech/search.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"
#include "toric/lagrangian.hpp"
#include "toric/rational.hpp"
