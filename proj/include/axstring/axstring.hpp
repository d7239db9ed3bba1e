#pragma once

#include "axstring/errors.hpp"
#include "axstring/spline.hpp"
#include "axstring/initial_data.hpp"
#include "axstring/domain.hpp"
#include "axstring/quadrature.hpp"
#include "axstring/extension.hpp"
#include "axstring/coefficients.hpp"
#include "axstring/series.hpp"
#include "axstring/energy.hpp"
#include "axstring/observability.hpp"
#include "axstring/oracle/characteristics.hpp"
#include "axstring/oracle/frozen_fd.hpp"
#include "axstring/oracle/cross_validate.hpp"
#include "axstring/config.hpp"
#include "axstring/io.hpp"
