#pragma once

#include "triquant/analytic.hpp"
#include "triquant/geometry.hpp"
#include "triquant/lattice.hpp"
#include "triquant/moments.hpp"
#include "triquant/oracle.hpp"
#include "triquant/search.hpp"
#include "triquant/structure.hpp"
#include "triquant/voronoi.hpp"
