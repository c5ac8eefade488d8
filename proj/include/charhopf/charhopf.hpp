#pragma once

#include "charhopf/braid.hpp"
#include "charhopf/checks.hpp"
#include "charhopf/integer.hpp"
#include "charhopf/io.hpp"
#include "charhopf/knot.hpp"
#include "charhopf/lr.hpp"
#include "charhopf/monomial.hpp"
#include "charhopf/partition.hpp"
#include "charhopf/pi_deform.hpp"
#include "charhopf/plethysm.hpp"
#include "charhopf/schur_ring.hpp"
#include "charhopf/series.hpp"
#include "charhopf/symfunc.hpp"
#include "charhopf/tensor.hpp"
