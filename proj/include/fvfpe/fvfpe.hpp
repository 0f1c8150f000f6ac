#pragma once

#include "fvfpe/assembly.hpp"
#include "fvfpe/caputo_l1.hpp"
#include "fvfpe/catalog.hpp"
#include "fvfpe/dense_oracle.hpp"
#include "fvfpe/drift_split.hpp"
#include "fvfpe/fd_reference.hpp"
#include "fvfpe/problem.hpp"
#include "fvfpe/stepper.hpp"
#include "fvfpe/tridiagonal.hpp"
#include "fvfpe/types.hpp"
#include "fvfpe/verification.hpp"
