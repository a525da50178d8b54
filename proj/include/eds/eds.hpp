#pragma once

// Umbrella header for the whole library.

#include "eds/common.hpp"
#include "eds/eds_core.hpp"
#include "eds/generators.hpp"
#include "eds/graph.hpp"
#include "eds/io.hpp"
#include "eds/level_framework.hpp"
#include "eds/patterns.hpp"
#include "eds/recognizers.hpp"
#include "eds/reductions.hpp"
#include "eds/solvers.hpp"
