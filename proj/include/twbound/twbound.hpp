#pragma once

// Umbrella header for the treewidth lower-bound toolkit.

#include "twbound/bounds.hpp"
#include "twbound/certificates.hpp"
#include "twbound/exact_treewidth.hpp"
#include "twbound/families.hpp"
#include "twbound/graph.hpp"
#include "twbound/graph_io.hpp"
#include "twbound/json_io.hpp"
#include "twbound/spectrum.hpp"
#include "twbound/td_io.hpp"
