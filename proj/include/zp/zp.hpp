#pragma once

#include "zp/bipoly.hpp"
#include "zp/blowup.hpp"
#include "zp/criterion.hpp"
#include "zp/diagram.hpp"
#include "zp/error.hpp"
#include "zp/family.hpp"
#include "zp/generic.hpp"
#include "zp/parse.hpp"
#include "zp/principalize.hpp"
#include "zp/ratfunc.hpp"
#include "zp/rational.hpp"
#include "zp/unipoly.hpp"
#include "zp/zeta.hpp"
