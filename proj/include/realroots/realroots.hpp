#pragma once

#include "realroots/core/numeric.hpp"
#include "realroots/core/polynomial.hpp"
#include "realroots/core/version.hpp"
#include "realroots/convex/ellipsoid.hpp"
#include "realroots/convex/integration.hpp"
#include "realroots/convex/mixed_volume.hpp"
#include "realroots/convex/polytope.hpp"
#include "realroots/convex/serialize.hpp"
#include "realroots/roots/metric.hpp"
#include "realroots/roots/root_system.hpp"
#include "realroots/roots/weyl.hpp"
#include "realroots/torus/torus_lab.hpp"
#include "realroots/group/group_lab.hpp"
#include "realroots/group/rep_ensemble.hpp"
#include "realroots/mc/gaussian_mixed_volume.hpp"
#include "realroots/mc/laurent.hpp"
#include "realroots/mc/random.hpp"
#include "realroots/mc/stats.hpp"
#include "realroots/mc/su2.hpp"
#include "realroots/mc/zero_count.hpp"
#include "realroots/report/commands.hpp"
#include "realroots/report/config.hpp"
#include "realroots/report/report.hpp"
