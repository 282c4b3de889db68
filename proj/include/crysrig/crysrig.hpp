#pragma once

#include "crysrig/acceptance.hpp"
#include "crysrig/colored_graph.hpp"
#include "crysrig/direction_network.hpp"
#include "crysrig/field.hpp"
#include "crysrig/geometry.hpp"
#include "crysrig/graph_format.hpp"
#include "crysrig/group.hpp"
#include "crysrig/group_matroid.hpp"
#include "crysrig/lift.hpp"
#include "crysrig/linalg.hpp"
#include "crysrig/map_graph.hpp"
#include "crysrig/projection.hpp"
#include "crysrig/random_graphs.hpp"
#include "crysrig/rigidity.hpp"
#include "crysrig/sparsity.hpp"
#include "crysrig/sparsity_oracle.hpp"
#include "crysrig/subgroup_oracle.hpp"
#include "crysrig/svg.hpp"
