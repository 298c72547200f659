#pragma once

// Umbrella header: the whole library in one include.

#include "catdet/boundary.hpp"
#include "catdet/catalan.hpp"
#include "catdet/cli.hpp"
#include "catdet/combinat.hpp"
#include "catdet/integer.hpp"
#include "catdet/io.hpp"
#include "catdet/lattice.hpp"
#include "catdet/matrix.hpp"
#include "catdet/pascal.hpp"
#include "catdet/series.hpp"
#include "catdet/verify.hpp"
