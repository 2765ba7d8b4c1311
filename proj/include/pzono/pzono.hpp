#pragma once

#include "pzono/errors.hpp"
#include "pzono/hardness.hpp"
#include "pzono/intersect.hpp"
#include "pzono/io.hpp"
#include "pzono/oracles.hpp"
#include "pzono/overapprox.hpp"
#include "pzono/plot.hpp"
#include "pzono/sets.hpp"
#include "pzono/splitting.hpp"
