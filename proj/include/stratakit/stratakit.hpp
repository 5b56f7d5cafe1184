#pragma once

// Umbrella header: the whole library.

#include "stratakit/classify.hpp"
#include "stratakit/complex.hpp"
#include "stratakit/families.hpp"
#include "stratakit/hochschild.hpp"
#include "stratakit/io.hpp"
#include "stratakit/matrix.hpp"
#include "stratakit/quiver.hpp"
#include "stratakit/rep.hpp"
