#ifndef KZRAT_KZRAT_HPP
#define KZRAT_KZRAT_HPP

#include "error.hpp"
#include "rational.hpp"
#include "matrix.hpp"
#include "linsolve.hpp"
#include "spectrum.hpp"
#include "system.hpp"
#include "series.hpp"
#include "kzsystem.hpp"
#include "symrep.hpp"
#include "frobenius.hpp"
#include "ratfunc.hpp"
#include "solver.hpp"

#endif // KZRAT_KZRAT_HPP
