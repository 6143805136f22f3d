#pragma once

#include "hyperop/errors.hpp"
#include "hyperop/ratpoly.hpp"
#include "hyperop/diffop.hpp"
#include "hyperop/families.hpp"
#include "hyperop/eulerian.hpp"
#include "hyperop/rootlab.hpp"
#include "hyperop/zerodist.hpp"
#include "hyperop/eigenhyp.hpp"
