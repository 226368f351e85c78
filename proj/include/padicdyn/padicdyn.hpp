// Umbrella header.
#pragma once

#include "padicdyn/berkovich.hpp"
#include "padicdyn/critical.hpp"
#include "padicdyn/cycles.hpp"
#include "padicdyn/disk_analysis.hpp"
#include "padicdyn/families.hpp"
#include "padicdyn/generators.hpp"
#include "padicdyn/newton_polygon.hpp"
#include "padicdyn/pl_function.hpp"
#include "padicdyn/poly.hpp"
#include "padicdyn/ratmap.hpp"
#include "padicdyn/rational.hpp"
#include "padicdyn/resultant.hpp"
#include "padicdyn/rng.hpp"
#include "padicdyn/valuation.hpp"
