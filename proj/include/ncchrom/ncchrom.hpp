#pragma once

#include "ncchrom/chromatic.hpp"
#include "ncchrom/coloring.hpp"
#include "ncchrom/games.hpp"
#include "ncchrom/graphs.hpp"
#include "ncchrom/ncgb/basis_io.hpp"
#include "ncchrom/ncgb/completion.hpp"
#include "ncchrom/ncgb/linalg_oracle.hpp"
#include "ncchrom/ncgb/normal_words.hpp"
#include "ncchrom/polynomial.hpp"
