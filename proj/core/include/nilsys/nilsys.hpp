#pragma once

#include "nilsys/algebra_io.hpp"
#include "nilsys/bch.hpp"
#include "nilsys/bounds.hpp"
#include "nilsys/catalog.hpp"
#include "nilsys/constraints.hpp"
#include "nilsys/error.hpp"
#include "nilsys/frame.hpp"
#include "nilsys/lattice.hpp"
#include "nilsys/lie_algebra.hpp"
#include "nilsys/matrix.hpp"
#include "nilsys/rational.hpp"
#include "nilsys/report_json.hpp"
#include "nilsys/simplex.hpp"
#include "nilsys/solid.hpp"
#include "nilsys/subspace.hpp"
