#pragma once

#include "ring.hpp"
#include "kelement.hpp"
#include "seq.hpp"
#include "monomial.hpp"
#include "gpoly.hpp"
#include "series.hpp"
#include "witt.hpp"
#include "logs.hpp"
#include "fgl.hpp"
#include "hopf.hpp"
#include "stab.hpp"
#include "report.hpp"
