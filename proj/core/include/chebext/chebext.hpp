#ifndef CHEBEXT_CHEBEXT_HPP
#define CHEBEXT_CHEBEXT_HPP

#include "chebext/canonical.hpp"
#include "chebext/closed_form.hpp"
#include "chebext/dual_solver.hpp"
#include "chebext/errors.hpp"
#include "chebext/oracle.hpp"
#include "chebext/polynomial.hpp"
#include "chebext/problem.hpp"
#include "chebext/record.hpp"
#include "chebext/supnorm.hpp"
#include "chebext/verify.hpp"

#endif  // CHEBEXT_CHEBEXT_HPP
