#pragma once

#include "sdepth/bounds.hpp"
#include "sdepth/clutter.hpp"
#include "sdepth/decomposition.hpp"
#include "sdepth/error.hpp"
#include "sdepth/json_io.hpp"
#include "sdepth/poset.hpp"
#include "sdepth/subset.hpp"
#include "sdepth/family.hpp"
