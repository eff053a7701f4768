#pragma once

#include "analysis.hpp"
#include "archive_io.hpp"
#include "arena.hpp"
#include "cell_state.hpp"
#include "classify.hpp"
#include "evolution.hpp"
#include "fisher.hpp"
#include "genome.hpp"
#include "grid.hpp"
#include "lineage.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "rle.hpp"
#include "tables.hpp"
