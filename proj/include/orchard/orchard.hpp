#pragma once

/// Umbrella header for the Orchard crossing number library.

#include "orchard/rational.hpp"
#include "orchard/geometry.hpp"
#include "orchard/graph.hpp"
#include "orchard/drawing.hpp"
#include "orchard/crossings.hpp"
#include "orchard/bounds.hpp"
#include "orchard/constructions.hpp"
#include "orchard/search.hpp"
#include "orchard/json_io.hpp"
#include "orchard/svg.hpp"
