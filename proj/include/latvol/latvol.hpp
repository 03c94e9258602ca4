#pragma once

// Umbrella header.  json_io.hpp expects the vendored nlohmann json single
// header on the include path; include individual module headers instead if
// serialization is not needed.

#include "latvol/errors.hpp"
#include "latvol/rational.hpp"
#include "latvol/matrix.hpp"
#include "latvol/polynomial.hpp"
#include "latvol/roots.hpp"
#include "latvol/simplex.hpp"
#include "latvol/sylvester.hpp"
#include "latvol/prodsum.hpp"
#include "latvol/tau.hpp"
#include "latvol/bounds.hpp"
#include "latvol/corpus.hpp"
#include "latvol/verify.hpp"
#include "latvol/json_io.hpp"
