#pragma once

#include "eiszeta/cyclo.hpp"
#include "eiszeta/eisenstein.hpp"
#include "eiszeta/error.hpp"
#include "eiszeta/groups.hpp"
#include "eiszeta/modular.hpp"
#include "eiszeta/padic.hpp"
#include "eiszeta/poly.hpp"
#include "eiszeta/rational.hpp"
#include "eiszeta/report.hpp"
#include "eiszeta/roots.hpp"
#include "eiszeta/serialize.hpp"
#include "eiszeta/series.hpp"
#include "eiszeta/verify.hpp"
#include "eiszeta/zeta.hpp"
