#pragma once

// Umbrella header.

#include "porism/conformal.hpp"
#include "porism/descartes.hpp"
#include "porism/designs.hpp"
#include "porism/exact.hpp"
#include "porism/gasket.hpp"
#include "porism/json_io.hpp"
#include "porism/linalg.hpp"
#include "porism/noneuclid.hpp"
#include "porism/rng.hpp"
#include "porism/sphere.hpp"
#include "porism/steiner.hpp"
#include "porism/svg.hpp"
