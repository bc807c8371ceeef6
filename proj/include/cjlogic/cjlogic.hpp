#pragma once

#include "cjlogic/formula.hpp"
#include "cjlogic/parser.hpp"
#include "cjlogic/three_valued.hpp"
#include "cjlogic/kripke.hpp"
#include "cjlogic/hilbert.hpp"
#include "cjlogic/generate.hpp"
#include "cjlogic/soundness.hpp"
#include "cjlogic/claims.hpp"
#include "cjlogic/reproduce.hpp"
