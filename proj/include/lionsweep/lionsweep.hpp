#pragma once

#include "lionsweep/cheeger.hpp"
#include "lionsweep/dynamics.hpp"
#include "lionsweep/error.hpp"
#include "lionsweep/graph.hpp"
#include "lionsweep/graph_io.hpp"
#include "lionsweep/isoperimetry.hpp"
#include "lionsweep/random.hpp"
#include "lionsweep/rational.hpp"
#include "lionsweep/search.hpp"
#include "lionsweep/strategies.hpp"
#include "lionsweep/subsets.hpp"
#include "lionsweep/trace_io.hpp"
#include "lionsweep/vertex_set.hpp"
