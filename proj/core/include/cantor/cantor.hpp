#pragma once

#include "cantor/big_rational.hpp"
#include "cantor/borel_iso.hpp"
#include "cantor/clopen.hpp"
#include "cantor/error.hpp"
#include "cantor/group.hpp"
#include "cantor/haar.hpp"
#include "cantor/io.hpp"
#include "cantor/radix.hpp"
#include "cantor/sampler.hpp"
