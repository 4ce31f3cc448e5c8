#pragma once

// Everything in one include.
#include "kzlab/errors.hpp"
#include "kzlab/number/rational.hpp"
#include "kzlab/number/cyclotomic.hpp"
#include "kzlab/number/alpha.hpp"
#include "kzlab/linalg/matrix.hpp"
#include "kzlab/linalg/hermitian.hpp"
#include "kzlab/alphabet.hpp"
#include "kzlab/surface/surface.hpp"
#include "kzlab/group/group.hpp"
#include "kzlab/rauzy/rauzy.hpp"
#include "kzlab/kz/generators.hpp"
#include "kzlab/density/density.hpp"
#include "kzlab/lyapunov/lyapunov.hpp"
#include "kzlab/report/report.hpp"
