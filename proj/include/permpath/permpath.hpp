#pragma once

// Umbrella header: exact-arithmetic toolkit for consecutive-pattern
// statistics on 3-1-2-avoiding permutations and their Dyck/Motzkin images.

#include "permpath/automaton.hpp"
#include "permpath/bigint.hpp"
#include "permpath/bijections.hpp"
#include "permpath/distributions.hpp"
#include "permpath/paths.hpp"
#include "permpath/permutation.hpp"
#include "permpath/polynomial.hpp"
#include "permpath/series.hpp"
#include "permpath/table.hpp"
#include "permpath/verify.hpp"
