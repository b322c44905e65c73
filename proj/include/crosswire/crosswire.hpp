#pragma once

#include "crosswire/dl_graph.hpp"
#include "crosswire/engine.hpp"
#include "crosswire/graph.hpp"
#include "crosswire/heisenberg.hpp"
#include "crosswire/horotree.hpp"
#include "crosswire/lamplighter.hpp"
#include "crosswire/laurent.hpp"
#include "crosswire/report_json.hpp"
