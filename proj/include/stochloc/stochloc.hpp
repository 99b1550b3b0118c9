#pragma once

#include "stochloc/deflate.hpp"
#include "stochloc/eigen.hpp"
#include "stochloc/error.hpp"
#include "stochloc/graph.hpp"
#include "stochloc/io.hpp"
#include "stochloc/matrix.hpp"
#include "stochloc/randic.hpp"
#include "stochloc/regions.hpp"
#include "stochloc/svg.hpp"
