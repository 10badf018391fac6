#pragma once

#include "hajos/canon.hpp"
#include "hajos/colouring.hpp"
#include "hajos/corpus.hpp"
#include "hajos/exact.hpp"
#include "hajos/graph.hpp"
#include "hajos/io.hpp"
#include "hajos/pathwidth.hpp"
#include "hajos/pipeline.hpp"
