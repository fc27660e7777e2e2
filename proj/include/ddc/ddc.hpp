#pragma once

#include "ddc/baselines.hpp"
#include "ddc/dataset.hpp"
#include "ddc/density.hpp"
#include "ddc/error.hpp"
#include "ddc/localcluster.hpp"
#include "ddc/merge.hpp"
#include "ddc/metrics.hpp"
#include "ddc/plot.hpp"
#include "ddc/result_io.hpp"
