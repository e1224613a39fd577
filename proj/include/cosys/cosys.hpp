#pragma once

#include "cosys/rational.hpp"
#include "cosys/qpoly.hpp"
#include "cosys/lattice.hpp"
#include "cosys/invariants.hpp"
#include "cosys/stability.hpp"
#include "cosys/walls.hpp"
#include "cosys/moduli.hpp"
#include "cosys/io.hpp"
#include "cosys/report.hpp"
