#pragma once

#include "fermigas/asymptotics.hpp"
#include "fermigas/density.hpp"
#include "fermigas/edge.hpp"
#include "fermigas/exact_solve.hpp"
#include "fermigas/hermite.hpp"
#include "fermigas/laguerre.hpp"
#include "fermigas/moments.hpp"
#include "fermigas/mu_triangle.hpp"
#include "fermigas/quadrature.hpp"
#include "fermigas/rational.hpp"
#include "fermigas/residual.hpp"
#include "fermigas/series.hpp"
#include "fermigas/shell.hpp"
#include "fermigas/transform.hpp"
#include "fermigas/verify.hpp"
