#pragma once

// Kendall tau sequence distance: minimum adjacent transpositions between two
// sequences over the same multiset of elements, plus classic rank-based
// Kendall statistics, reference oracles, and a benchmark harness.

#include "bench.hpp"
#include "element_ops.hpp"
#include "errors.hpp"
#include "inversions.hpp"
#include "oracle.hpp"
#include "rank_metrics.hpp"
#include "relabel.hpp"
#include "tau_sequence.hpp"
