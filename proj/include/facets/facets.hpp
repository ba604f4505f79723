// facets.hpp -- umbrella header

#pragma once

#include "betti.hpp"
#include "cm.hpp"
#include "core.hpp"
#include "covers.hpp"
#include "duality.hpp"
#include "exact_rank.hpp"
#include "field.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "linquo.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "trees.hpp"
