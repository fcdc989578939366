#pragma once

#include "tcreal/common.hpp"
#include "tcreal/degree_sequence.hpp"
#include "tcreal/graph_io.hpp"
#include "tcreal/labeling.hpp"
#include "tcreal/multigraph.hpp"
#include "tcreal/oracle.hpp"
#include "tcreal/realize.hpp"
#include "tcreal/verify.hpp"
