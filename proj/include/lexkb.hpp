#pragma once

#include "lexkb/align.hpp"
#include "lexkb/chains.hpp"
#include "lexkb/engine.hpp"
#include "lexkb/error.hpp"
#include "lexkb/index.hpp"
#include "lexkb/ingest.hpp"
#include "lexkb/kb.hpp"
#include "lexkb/morph.hpp"
#include "lexkb/quiz.hpp"
#include "lexkb/similarity.hpp"
#include "lexkb/stoplist.hpp"
#include "lexkb/variants.hpp"
