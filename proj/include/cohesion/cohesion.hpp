#pragma once

// Umbrella header: phrase-level cohesion graphs, document coherence
// scoring, and the discrimination/insertion evaluation harness.

#include "cohesion/coref.hpp"
#include "cohesion/document.hpp"
#include "cohesion/error.hpp"
#include "cohesion/eval.hpp"
#include "cohesion/export.hpp"
#include "cohesion/extract.hpp"
#include "cohesion/graph.hpp"
#include "cohesion/json_io.hpp"
#include "cohesion/lexicon.hpp"
#include "cohesion/parallel.hpp"
#include "cohesion/permutation.hpp"
#include "cohesion/rng.hpp"
#include "cohesion/score.hpp"
#include "cohesion/synthesize.hpp"
#include "cohesion/unicode.hpp"
