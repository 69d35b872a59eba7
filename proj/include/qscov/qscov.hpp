#pragma once

#include "qscov/scalar.hpp"
#include "qscov/caps.hpp"
#include "qscov/polynomial.hpp"
#include "qscov/linalg.hpp"
#include "qscov/qsym.hpp"
#include "qscov/group.hpp"
#include "qscov/paths.hpp"
#include "qscov/groebner.hpp"
#include "qscov/hilbert.hpp"
#include "qscov/io.hpp"
