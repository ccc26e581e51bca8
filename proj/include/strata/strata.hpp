#pragma once

// Umbrella header: the exact structure theory plus the grid numerics.

#include "strata/algebra.hpp"
#include "strata/family.hpp"
#include "strata/family_strata.hpp"
#include "strata/freelie.hpp"
#include "strata/group.hpp"
#include "strata/report.hpp"
#include "strata/specfile.hpp"
#include "strata/stratification.hpp"

#include "strata/analysis/convolve.hpp"
#include "strata/analysis/dilation.hpp"
#include "strata/analysis/fourier.hpp"
#include "strata/analysis/homogenize.hpp"
#include "strata/analysis/quasinorm.hpp"
