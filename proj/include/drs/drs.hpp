#pragma once

#include "drs/coin_weighing.hpp"
#include "drs/families.hpp"
#include "drs/gadget.hpp"
#include "drs/graph.hpp"
#include "drs/resolving.hpp"
#include "drs/set_cover.hpp"
