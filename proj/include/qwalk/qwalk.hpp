#pragma once

#include "qwalk/analysis.hpp"
#include "qwalk/engine.hpp"
#include "qwalk/grover.hpp"
#include "qwalk/io.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/recursion.hpp"
#include "qwalk/spinor.hpp"
#include "qwalk/version.hpp"
