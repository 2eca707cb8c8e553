#pragma once

#include "stabledm/generators.hpp"
#include "stabledm/kernels.hpp"
#include "stabledm/levy.hpp"
#include "stabledm/onesided_stable.hpp"
#include "stabledm/quadrature.hpp"
#include "stabledm/report.hpp"
#include "stabledm/samplers.hpp"
#include "stabledm/special.hpp"
#include "stabledm/stable_numerics.hpp"
#include "stabledm/stats.hpp"
#include "stabledm/suite.hpp"
#include "stabledm/types.hpp"
