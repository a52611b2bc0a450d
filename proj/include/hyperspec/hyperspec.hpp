#pragma once

#include "bounds.hpp"
#include "closed_forms.hpp"
#include "combinatorics.hpp"
#include "fixtures.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "polyform.hpp"
#include "solver.hpp"
