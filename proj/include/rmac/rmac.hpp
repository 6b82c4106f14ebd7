#pragma once

#include "rmac/common.hpp"
#include "rmac/complex_core.hpp"
#include "rmac/surface.hpp"
#include "rmac/embedding.hpp"
#include "rmac/necklace.hpp"
#include "rmac/cyclic_quotient.hpp"
#include "rmac/io.hpp"
