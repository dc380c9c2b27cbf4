#pragma once

#include "error.hpp"
#include "ring_core.hpp"
#include "series.hpp"
#include "poly.hpp"
#include "finite_field.hpp"
#include "weierstrass.hpp"
#include "padic_poly.hpp"
#include "factorization.hpp"
#include "expression.hpp"
#include "cli.hpp"
