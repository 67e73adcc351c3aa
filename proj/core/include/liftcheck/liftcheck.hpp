#pragma once

#include "liftcheck/abelian_group.hpp"
#include "liftcheck/canonical.hpp"
#include "liftcheck/certificate.hpp"
#include "liftcheck/cycle_space.hpp"
#include "liftcheck/enumeration.hpp"
#include "liftcheck/error.hpp"
#include "liftcheck/free_group.hpp"
#include "liftcheck/graph_of_groups.hpp"
#include "liftcheck/int_matrix.hpp"
#include "liftcheck/integer_reps.hpp"
#include "liftcheck/linalg.hpp"
#include "liftcheck/surface.hpp"
