// Umbrella header.

#pragma once

#include "patedit/containment.hpp"
#include "patedit/editing.hpp"
#include "patedit/experiment.hpp"
#include "patedit/graphs.hpp"
#include "patedit/io.hpp"
#include "patedit/matrix.hpp"
#include "patedit/pattern.hpp"
#include "patedit/random.hpp"
#include "patedit/rational.hpp"
#include "patedit/serialize.hpp"
