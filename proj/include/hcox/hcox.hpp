#pragma once

#include "hcox/golden.hpp"
#include "hcox/matrix.hpp"
#include "hcox/rootsystem.hpp"
#include "hcox/affine.hpp"
#include "hcox/fragment.hpp"
#include "hcox/lineanalysis.hpp"
#include "hcox/cutproject.hpp"
#include "hcox/io.hpp"
#include "hcox/verify.hpp"
