#pragma once

#include "ycert/rational.hpp"
#include "ycert/unipoly.hpp"
#include "ycert/ratfunc.hpp"
#include "ycert/partial_fractions.hpp"
#include "ycert/piscaled.hpp"
#include "ycert/integrals.hpp"
#include "ycert/spectral.hpp"
#include "ycert/sturm.hpp"
#include "ycert/sign.hpp"
#include "ycert/window.hpp"
#include "ycert/certify.hpp"
#include "ycert/claims.hpp"
#include "ycert/hp.hpp"
#include "ycert/quadrature.hpp"
#include "ycert/oracle.hpp"
#include "ycert/report.hpp"
#include "ycert/sweep.hpp"
