#pragma once

#include "zetafast/bench.hpp"
#include "zetafast/compensated.hpp"
#include "zetafast/dirichlet.hpp"
#include "zetafast/engine.hpp"
#include "zetafast/oracle.hpp"
#include "zetafast/params.hpp"
#include "zetafast/scanner.hpp"
#include "zetafast/special.hpp"
#include "zetafast/types.hpp"
