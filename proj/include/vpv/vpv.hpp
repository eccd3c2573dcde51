#pragma once

#include "vpv/complex.hpp"
#include "vpv/config.hpp"
#include "vpv/errors.hpp"
#include "vpv/explorer.hpp"
#include "vpv/io.hpp"
#include "vpv/lattice.hpp"
#include "vpv/oracle.hpp"
#include "vpv/polylog.hpp"
#include "vpv/products.hpp"
