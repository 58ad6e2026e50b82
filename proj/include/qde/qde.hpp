#pragma once

#include "qde/circuit.hpp"
#include "qde/common.hpp"
#include "qde/composite.hpp"
#include "qde/encoding.hpp"
#include "qde/graph.hpp"
#include "qde/image.hpp"
#include "qde/io.hpp"
#include "qde/preprocess.hpp"
#include "qde/scalar.hpp"
#include "qde/statevec.hpp"
#include "qde/vector.hpp"
