#pragma once

#include "secantlab/field.hpp"
#include "secantlab/matrix.hpp"
#include "secantlab/multipoly.hpp"
#include "secantlab/param_map.hpp"
#include "secantlab/composition_algebra.hpp"
#include "secantlab/catalog.hpp"
#include "secantlab/spec_parser.hpp"
#include "secantlab/terracini.hpp"
#include "secantlab/bounds.hpp"
#include "secantlab/report.hpp"
#include "secantlab/suites.hpp"
