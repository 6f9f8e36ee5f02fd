#pragma once

#include "twoview/algebra.hpp"
#include "twoview/bench.hpp"
#include "twoview/camera.hpp"
#include "twoview/decompose.hpp"
#include "twoview/error.hpp"
#include "twoview/essential.hpp"
#include "twoview/experiment.hpp"
#include "twoview/identify.hpp"
#include "twoview/io.hpp"
#include "twoview/motion.hpp"
#include "twoview/pipeline.hpp"
#include "twoview/reconstruct.hpp"
