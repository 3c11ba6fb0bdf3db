#pragma once

#include "glsm/cache.hpp"
#include "glsm/coh_ring.hpp"
#include "glsm/model.hpp"
#include "glsm/report_io.hpp"
#include "glsm/series.hpp"
#include "glsm/series_io.hpp"
#include "glsm/specializations.hpp"
#include "glsm/toric.hpp"
#include "glsm/validate.hpp"
