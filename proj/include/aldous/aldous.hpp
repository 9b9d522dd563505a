#pragma once

#include "aldous/partition.hpp"
#include "aldous/permutation.hpp"
#include "aldous/graph.hpp"
#include "aldous/rational.hpp"
#include "aldous/jacobi.hpp"
#include "aldous/symrep.hpp"
#include "aldous/spectral.hpp"
#include "aldous/characters.hpp"
#include "aldous/order.hpp"
#include "aldous/game.hpp"
#include "aldous/verify.hpp"
#include "aldous/config.hpp"
