#pragma once

#include "aomp/error.hpp"
#include "aomp/numerics/matrix.hpp"
#include "aomp/numerics/rng.hpp"
#include "aomp/numerics/least_squares.hpp"
#include "aomp/numerics/sym_eigen.hpp"
#include "aomp/numerics/kmeans.hpp"
#include "aomp/datagen/dataset.hpp"
#include "aomp/datagen/matrix_io.hpp"
#include "aomp/selfrep/types.hpp"
#include "aomp/selfrep/omp.hpp"
#include "aomp/selfrep/active.hpp"
#include "aomp/selfrep/lasso.hpp"
#include "aomp/metrics/hungarian.hpp"
#include "aomp/metrics/metrics.hpp"
#include "aomp/pipeline/params.hpp"
#include "aomp/pipeline/self_representation.hpp"
#include "aomp/pipeline/spectral.hpp"
#include "aomp/pipeline/run.hpp"
#include "aomp/harness/config.hpp"
#include "aomp/harness/sweep.hpp"
#include "aomp/harness/summarize.hpp"
#include "aomp/harness/single.hpp"
