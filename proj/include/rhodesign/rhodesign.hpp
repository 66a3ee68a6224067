#pragma once

#include "rhodesign/alternating.hpp"
#include "rhodesign/constructions.hpp"
#include "rhodesign/decomposition.hpp"
#include "rhodesign/error.hpp"
#include "rhodesign/graph.hpp"
#include "rhodesign/labeling.hpp"
#include "rhodesign/oracle.hpp"
