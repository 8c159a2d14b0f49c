#pragma once

#include "linkc/baselines.hpp"
#include "linkc/cohesion.hpp"
#include "linkc/community.hpp"
#include "linkc/density.hpp"
#include "linkc/error.hpp"
#include "linkc/evaluation.hpp"
#include "linkc/graph.hpp"
#include "linkc/io.hpp"
#include "linkc/truss.hpp"
