#pragma once

#include "qfib/error.hpp"
#include "qfib/rational.hpp"
#include "qfib/unipoly.hpp"
#include "qfib/sturm.hpp"
#include "qfib/bipoly.hpp"
#include "qfib/symbols.hpp"
#include "qfib/fibration.hpp"
#include "qfib/radical.hpp"
#include "qfib/mpoly.hpp"
#include "qfib/expr.hpp"
#include "qfib/soscert.hpp"
#include "qfib/modp.hpp"
#include "qfib/ch0.hpp"
#include "qfib/pencil.hpp"
#include "qfib/report.hpp"
