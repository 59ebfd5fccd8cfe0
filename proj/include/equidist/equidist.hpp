#pragma once

#include "equidist/bounds.hpp"
#include "equidist/certify.hpp"
#include "equidist/construct.hpp"
#include "equidist/core.hpp"
#include "equidist/error.hpp"
#include "equidist/exact_linalg.hpp"
#include "equidist/family_io.hpp"
#include "equidist/report_json.hpp"
#include "equidist/search.hpp"
#include "equidist/sweep.hpp"
