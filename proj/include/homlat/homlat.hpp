#pragma once

#include "homlat/enumerate.hpp"
#include "homlat/fixtures.hpp"
#include "homlat/homchecks.hpp"
#include "homlat/io.hpp"
#include "homlat/lattice.hpp"
#include "homlat/monoid.hpp"
#include "homlat/monoid_ops.hpp"
#include "homlat/nsub.hpp"
#include "homlat/scenarios.hpp"
#include "homlat/semilattice.hpp"
#include "homlat/subset.hpp"
#include "homlat/zexact/algorithms.hpp"
#include "homlat/zexact/cmon.hpp"
#include "homlat/zexact/context.hpp"
#include "homlat/zexact/ses.hpp"
