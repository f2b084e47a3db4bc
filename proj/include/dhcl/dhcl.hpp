#pragma once

#include "dhcl/bench.hpp"
#include "dhcl/distance.hpp"
#include "dhcl/epoch_array.hpp"
#include "dhcl/graph.hpp"
#include "dhcl/incremental.hpp"
#include "dhcl/labelling.hpp"
#include "dhcl/landmarks.hpp"
#include "dhcl/oracle.hpp"
#include "dhcl/query.hpp"
#include "dhcl/workload.hpp"
