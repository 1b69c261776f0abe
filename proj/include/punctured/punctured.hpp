#ifndef PUNCTURED_PUNCTURED_HPP
#define PUNCTURED_PUNCTURED_HPP

#include "bounds.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "hypergeometric.hpp"
#include "metrics.hpp"
#include "types.hpp"
#include "verify.hpp"

#endif
