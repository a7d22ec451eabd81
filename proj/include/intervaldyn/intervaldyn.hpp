#pragma once

// Umbrella header: the whole library in one include.
//
// Combinatorial layer
//   sharkovskii.hpp          total order on periods, neighbors in the order
//   cyclic_permutation.hpp   orbit patterns and their inverses
//   transition_digraph.hpp   covering digraph of a pattern
//   linear_map.hpp           exact piecewise-linear realization
//   forced_periods.hpp       forced-period decisions, minimality predicates
//   catalog.hpp              reference patterns (spiral, period-7 catalog)
//   classify.hpp             enumeration of pattern classes up to inverse
//
// Numerical layer
//   unimodal.hpp             the four one-parameter map families
//   superstable.hpp          superstable-parameter scanning and ladders
//   cascade.hpp              gap/distance ratio estimators, appearance bands
//   patterns.hpp             appearance-order rows and scan replays
//   universal.hpp            doubling transformation, rescaled approximants

#include "intervaldyn/cascade.hpp"
#include "intervaldyn/catalog.hpp"
#include "intervaldyn/classify.hpp"
#include "intervaldyn/cyclic_permutation.hpp"
#include "intervaldyn/errors.hpp"
#include "intervaldyn/forced_periods.hpp"
#include "intervaldyn/linear_map.hpp"
#include "intervaldyn/patterns.hpp"
#include "intervaldyn/sharkovskii.hpp"
#include "intervaldyn/superstable.hpp"
#include "intervaldyn/transition_digraph.hpp"
#include "intervaldyn/unimodal.hpp"
#include "intervaldyn/universal.hpp"
