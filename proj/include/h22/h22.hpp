#pragma once

#include "h22/algebra.hpp"
#include "h22/checks.hpp"
#include "h22/csv.hpp"
#include "h22/operators.hpp"
#include "h22/random.hpp"
#include "h22/report.hpp"
#include "h22/series.hpp"
#include "h22/space.hpp"
#include "h22/suite.hpp"
#include "h22/symmetry.hpp"
#include "h22/zeta.hpp"
