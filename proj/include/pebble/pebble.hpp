#pragma once

#include "pebble/canonical.hpp"
#include "pebble/census.hpp"
#include "pebble/constructions.hpp"
#include "pebble/digraph.hpp"
#include "pebble/enumerate.hpp"
#include "pebble/family_f.hpp"
#include "pebble/pebbling.hpp"
