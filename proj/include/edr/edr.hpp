#pragma once

#include "edr/error.hpp"
#include "edr/integer.hpp"
#include "edr/gf_poly.hpp"
#include "edr/ring.hpp"
#include "edr/literal.hpp"
#include "edr/matrix.hpp"
#include "edr/adequate.hpp"
#include "edr/reduce.hpp"
#include "edr/complete.hpp"
#include "edr/checkers.hpp"
