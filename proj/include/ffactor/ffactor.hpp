#pragma once

#include "ffactor/bounds.hpp"
#include "ffactor/constructions.hpp"
#include "ffactor/factor.hpp"
#include "ffactor/graph.hpp"
#include "ffactor/instance_io.hpp"
#include "ffactor/invariants.hpp"
#include "ffactor/limits.hpp"
#include "ffactor/matching.hpp"
#include "ffactor/random.hpp"
#include "ffactor/rational.hpp"
#include "ffactor/report.hpp"
#include "ffactor/theorems.hpp"
#include "ffactor/tutte.hpp"
