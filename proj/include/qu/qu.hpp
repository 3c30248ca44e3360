// qu.hpp - convenience umbrella for the whole library
#pragma once

#include "qu/core.hpp"
#include "qu/error.hpp"
#include "qu/graph.hpp"
#include "qu/metric.hpp"
#include "qu/notation.hpp"
#include "qu/rational.hpp"
#include "qu/render.hpp"
#include "qu/transform.hpp"
