#pragma once

#include "endo/constants.hpp"
#include "endo/descent.hpp"
#include "endo/error.hpp"
#include "endo/exact_value.hpp"
#include "endo/families.hpp"
#include "endo/localfield.hpp"
#include "endo/params.hpp"
#include "endo/partitions.hpp"
#include "endo/report.hpp"
#include "endo/suites.hpp"
#include "endo/weyl.hpp"
