#ifndef EQS_EQS_HPP
#define EQS_EQS_HPP

#include "eqs/configuration.hpp"
#include "eqs/diffeq.hpp"
#include "eqs/electrostatics.hpp"
#include "eqs/families.hpp"
#include "eqs/field.hpp"
#include "eqs/gconvex.hpp"
#include "eqs/interval.hpp"
#include "eqs/oracle.hpp"
#include "eqs/polynomial.hpp"
#include "eqs/solver.hpp"

#endif  // EQS_EQS_HPP
