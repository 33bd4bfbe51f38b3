#pragma once

#include "wedgeqed/errors.hpp"
#include "wedgeqed/halfsheet.hpp"
#include "wedgeqed/oracle.hpp"
#include "wedgeqed/plates.hpp"
#include "wedgeqed/quadrature.hpp"
#include "wedgeqed/rates.hpp"
#include "wedgeqed/shift.hpp"
#include "wedgeqed/specfun.hpp"
#include "wedgeqed/version.hpp"
#include "wedgeqed/wedge.hpp"
