#pragma once

#include "gds/construct.hpp"
#include "gds/dense.hpp"
#include "gds/error.hpp"
#include "gds/experiment.hpp"
#include "gds/householder.hpp"
#include "gds/matrix.hpp"
#include "gds/norms.hpp"
#include "gds/random.hpp"
#include "gds/specs.hpp"
#include "gds/verify.hpp"
