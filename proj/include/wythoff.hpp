#pragma once

#include "wythoff/fib.hpp"
#include "wythoff/golden.hpp"
#include "wythoff/morphism.hpp"
#include "wythoff/sequences.hpp"
#include "wythoff/infer.hpp"
#include "wythoff/walnut.hpp"
#include "wythoff/game.hpp"
#include "wythoff/kernel.hpp"
#include "wythoff/pn_cache.hpp"
#include "wythoff/characterizations.hpp"
#include "wythoff/io.hpp"
#include "wythoff/suites.hpp"
