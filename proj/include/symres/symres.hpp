#pragma once

// Umbrella header: the whole library.

#include <symres/decompose.hpp>
#include <symres/errors.hpp>
#include <symres/families.hpp>
#include <symres/ideal.hpp>
#include <symres/io.hpp>
#include <symres/monomial.hpp>
#include <symres/parse.hpp>
#include <symres/rational.hpp>
#include <symres/resurgence.hpp>
#include <symres/ring.hpp>
#include <symres/symbolic.hpp>
#include <symres/verify.hpp>
