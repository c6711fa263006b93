#pragma once

#include "vmp/analytic.hpp"
#include "vmp/combinatorics.hpp"
#include "vmp/fock.hpp"
#include "vmp/genfunc.hpp"
#include "vmp/measure.hpp"
#include "vmp/moments.hpp"
#include "vmp/poly.hpp"
#include "vmp/rational.hpp"
#include "vmp/series.hpp"
