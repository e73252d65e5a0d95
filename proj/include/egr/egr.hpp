#pragma once

#include "egr/bounds.hpp"
#include "egr/census.hpp"
#include "egr/constructions.hpp"
#include "egr/error.hpp"
#include "egr/field.hpp"
#include "egr/geometry.hpp"
#include "egr/graph.hpp"
#include "egr/graph_io.hpp"
#include "egr/reproduce.hpp"
