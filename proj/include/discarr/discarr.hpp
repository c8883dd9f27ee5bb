#pragma once

#include "discarr/rational.hpp"
#include "discarr/matrix.hpp"
#include "discarr/subspace.hpp"
#include "discarr/subsets.hpp"
#include "discarr/random.hpp"
#include "discarr/errors.hpp"
#include "discarr/arrangement.hpp"
#include "discarr/rset.hpp"
#include "discarr/discriminantal.hpp"
#include "discarr/nvg.hpp"
#include "discarr/fixtures.hpp"
#include "discarr/json_io.hpp"
#include "discarr/svg.hpp"
