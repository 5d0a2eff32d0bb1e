#pragma once

#include <hypmetrics/conformal.hpp>
#include <hypmetrics/contour.hpp>
#include <hypmetrics/errors.hpp>
#include <hypmetrics/geometry.hpp>
#include <hypmetrics/metrics.hpp>
#include <hypmetrics/oracle.hpp>
#include <hypmetrics/sampling.hpp>
#include <hypmetrics/solvers.hpp>
#include <hypmetrics/summary.hpp>
#include <hypmetrics/verify.hpp>
#include <hypmetrics/version.hpp>
