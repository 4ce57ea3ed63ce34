#pragma once

#include "dcover/exactmath/bivariate.hpp"
#include "dcover/exactmath/factor.hpp"
#include "dcover/exactmath/galois_field.hpp"
#include "dcover/exactmath/primes.hpp"
#include "dcover/exactmath/rational.hpp"
#include "dcover/exactmath/rational_field.hpp"
#include "dcover/exactmath/rational_roots.hpp"
#include "dcover/exactmath/squarefree.hpp"
#include "dcover/exactmath/univariate.hpp"
#include "dcover/fibration.hpp"
#include "dcover/genus_change.hpp"
#include "dcover/geography.hpp"
#include "dcover/report.hpp"
#include "dcover/resolution/canonical.hpp"
#include "dcover/resolution/germ.hpp"
#include "dcover/resolution/parser.hpp"
#include "dcover/verify.hpp"
#include "dcover/xi_calc.hpp"
