#pragma once

#include "ctoda/rational.hpp"
#include "ctoda/qsqrt2.hpp"
#include "ctoda/matrix.hpp"
#include "ctoda/lie.hpp"
#include "ctoda/cluster.hpp"
#include "ctoda/chiprep.hpp"
#include "ctoda/network.hpp"
#include "ctoda/qsystem.hpp"
#include "ctoda/backlund.hpp"
#include "ctoda/io.hpp"
