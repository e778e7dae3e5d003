#pragma once

// Umbrella header: hierarchical backbone extraction from object-tag data.

#include "hb/backbone.hpp"
#include "hb/benchmark.hpp"
#include "hb/bipartite.hpp"
#include "hb/cooccurrence.hpp"
#include "hb/dag.hpp"
#include "hb/dot.hpp"
#include "hb/errors.hpp"
#include "hb/evaluate.hpp"
#include "hb/gaf.hpp"
#include "hb/hierarchy.hpp"
#include "hb/ids.hpp"
#include "hb/io.hpp"
#include "hb/manifest.hpp"
#include "hb/moments.hpp"
#include "hb/obo.hpp"
#include "hb/pipeline.hpp"
#include "hb/prune.hpp"
#include "hb/report_io.hpp"
#include "hb/rng.hpp"
#include "hb/strength.hpp"
#include "hb/version.hpp"
