#pragma once

// Umbrella header for the weighted-isoperimetric-inequality toolkit.

#include "isoperim/conformal.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/fft.hpp"
#include "isoperim/geometry.hpp"
#include "isoperim/greens.hpp"
#include "isoperim/hardy_sobolev.hpp"
#include "isoperim/io.hpp"
#include "isoperim/measures.hpp"
#include "isoperim/quadrature.hpp"
#include "isoperim/report.hpp"
#include "isoperim/search.hpp"
#include "isoperim/series.hpp"
#include "isoperim/vec2.hpp"
