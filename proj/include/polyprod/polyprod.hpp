// Umbrella header: the whole library.
#pragma once

#include "polyprod/complex.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/euler.hpp"
#include "polyprod/groups.hpp"
#include "polyprod/json_io.hpp"
#include "polyprod/oracle.hpp"
#include "polyprod/poly.hpp"
#include "polyprod/rational.hpp"
#include "polyprod/subsets.hpp"
