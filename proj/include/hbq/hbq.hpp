#pragma once

#include "hbq/classical_zeta.hpp"
#include "hbq/dirichlet.hpp"
#include "hbq/exact.hpp"
#include "hbq/finite_sums.hpp"
#include "hbq/mellin.hpp"
#include "hbq/numbers.hpp"
#include "hbq/numerics.hpp"
#include "hbq/outcome.hpp"
#include "hbq/parallel.hpp"
#include "hbq/q_sums.hpp"
#include "hbq/q_zeta.hpp"
#include "hbq/report.hpp"
