#pragma once

// Umbrella header: exact localization of equivariant integrals over torus
// fixed-point data.

#include "eqloc/char_class.hpp"
#include "eqloc/errors.hpp"
#include "eqloc/lin_factored_rational.hpp"
#include "eqloc/linear_form.hpp"
#include "eqloc/localize.hpp"
#include "eqloc/model.hpp"
#include "eqloc/model_io.hpp"
#include "eqloc/oracle.hpp"
#include "eqloc/polynomial.hpp"
#include "eqloc/rational.hpp"
#include "eqloc/truncated_series.hpp"
