#pragma once

#include "domstruct/bitset.hpp"
#include "domstruct/cycles.hpp"
#include "domstruct/domination.hpp"
#include "domstruct/dot.hpp"
#include "domstruct/generators.hpp"
#include "domstruct/graph.hpp"
#include "domstruct/graph_io.hpp"
#include "domstruct/harness.hpp"
#include "domstruct/structure.hpp"
#include "domstruct/x3assign.hpp"
