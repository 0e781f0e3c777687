#pragma once

#include "hyperlogic/arith.hpp"
#include "hyperlogic/assignment.hpp"
#include "hyperlogic/compiled.hpp"
#include "hyperlogic/constructions.hpp"
#include "hyperlogic/error.hpp"
#include "hyperlogic/expansion.hpp"
#include "hyperlogic/fo_bridge.hpp"
#include "hyperlogic/fo_formula.hpp"
#include "hyperlogic/formula.hpp"
#include "hyperlogic/hyperctl.hpp"
#include "hyperlogic/hyperltl.hpp"
#include "hyperlogic/io.hpp"
#include "hyperlogic/kripke.hpp"
#include "hyperlogic/lasso.hpp"
#include "hyperlogic/parser.hpp"
#include "hyperlogic/prenex.hpp"
#include "hyperlogic/split.hpp"
#include "hyperlogic/word.hpp"
