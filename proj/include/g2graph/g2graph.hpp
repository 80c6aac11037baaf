#pragma once

#include "g2graph/automorphism.hpp"
#include "g2graph/geometry.hpp"
#include "g2graph/gf4.hpp"
#include "g2graph/graph.hpp"
#include "g2graph/graph_io.hpp"
#include "g2graph/matrix.hpp"
#include "g2graph/perm_group.hpp"
#include "g2graph/pipeline.hpp"
#include "g2graph/seidel.hpp"
#include "g2graph/srg.hpp"
#include "g2graph/two_graph.hpp"
#include "g2graph/verification.hpp"
