#pragma once

#include "hooklab/diagrams.hpp"
#include "hooklab/grothendieck.hpp"
#include "hooklab/paths.hpp"
#include "hooklab/permutations.hpp"
#include "hooklab/poly.hpp"
#include "hooklab/rational.hpp"
#include "hooklab/sampler.hpp"
#include "hooklab/series.hpp"
#include "hooklab/shapes.hpp"
#include "hooklab/sweep.hpp"
#include "hooklab/tableaux.hpp"
#include "hooklab/verify.hpp"
