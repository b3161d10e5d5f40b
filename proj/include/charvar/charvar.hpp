#pragma once

// umbrella header: exact arithmetic, group invariants, component census,
// and the numeric representation lab

#include "charvar/census.hpp"
#include "charvar/deform.hpp"
#include "charvar/error.hpp"
#include "charvar/groups.hpp"
#include "charvar/int_matrix.hpp"
#include "charvar/integer.hpp"
#include "charvar/representation.hpp"
#include "charvar/root_of_unity.hpp"
#include "charvar/smith.hpp"
