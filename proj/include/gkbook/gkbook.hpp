// gkbook.hpp — umbrella header.
#pragma once

#include "gkbook/book.hpp"
#include "gkbook/geom.hpp"
#include "gkbook/graph.hpp"
#include "gkbook/json_io.hpp"
#include "gkbook/layouts.hpp"
#include "gkbook/planarity.hpp"
#include "gkbook/render.hpp"
#include "gkbook/separation.hpp"
#include "gkbook/solver.hpp"

