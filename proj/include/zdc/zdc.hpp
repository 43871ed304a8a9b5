#pragma once

#include "zdc/arith.hpp"
#include "zdc/compare.hpp"
#include "zdc/detector.hpp"
#include "zdc/foundations.hpp"
#include "zdc/gamma.hpp"
#include "zdc/numeric.hpp"
#include "zdc/optimizer.hpp"
#include "zdc/params.hpp"
#include "zdc/pipeline.hpp"
#include "zdc/quadrature.hpp"
#include "zdc/reference_tables.hpp"
#include "zdc/report.hpp"
#include "zdc/weights.hpp"
#include "zdc/zerocount.hpp"
