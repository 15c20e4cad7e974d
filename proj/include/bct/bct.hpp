#pragma once

#include "bct/alphabet.hpp"
#include "bct/context_tree.hpp"
#include "bct/counts.hpp"
#include "bct/engine.hpp"
#include "bct/errors.hpp"
#include "bct/inference.hpp"
#include "bct/log_weight.hpp"
#include "bct/sequence.hpp"
#include "bct/simulate.hpp"
#include "bct/tree_space.hpp"
#include "bct/version.hpp"
#include "bct/weights.hpp"
