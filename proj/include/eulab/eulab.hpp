#pragma once

// Umbrella header: exact-arithmetic permutation statistics, truncated EGF
// algebra, context-free grammar calculus, and the identity-check harness.

#include "eulab/rational.hpp"
#include "eulab/vartable.hpp"
#include "eulab/monomial.hpp"
#include "eulab/mpoly.hpp"
#include "eulab/mpoly_json.hpp"
#include "eulab/perm.hpp"
#include "eulab/series.hpp"
#include "eulab/series_builders.hpp"
#include "eulab/grammar.hpp"
#include "eulab/families.hpp"
#include "eulab/reparam.hpp"
#include "eulab/harness.hpp"
