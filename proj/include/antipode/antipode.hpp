#ifndef ANTIPODE_ANTIPODE_HPP
#define ANTIPODE_ANTIPODE_HPP

#include "antipode/error.hpp"
#include "antipode/rational.hpp"
#include "antipode/cyclotomic.hpp"
#include "antipode/numeric.hpp"
#include "antipode/factored.hpp"
#include "antipode/scalar.hpp"
#include "antipode/literal.hpp"
#include "antipode/matrix.hpp"
#include "antipode/report.hpp"
#include "antipode/fusion.hpp"
#include "antipode/module_action.hpp"
#include "antipode/parallel.hpp"
#include "antipode/spectrum.hpp"
#include "antipode/pivotalization.hpp"
#include "antipode/families.hpp"
#include "antipode/oracle.hpp"
#include "antipode/spec_io.hpp"
#include "antipode/family_specs.hpp"

#endif
