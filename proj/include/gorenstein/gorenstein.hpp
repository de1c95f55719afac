#pragma once

#include "field.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "matrix.hpp"
#include "module.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "resolution.hpp"
#include "apolar.hpp"
#include "constructions.hpp"
#include "classify.hpp"
#include "cy.hpp"
#include "io.hpp"
