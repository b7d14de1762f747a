#pragma once

// Convenience header pulling in the whole library.

#include "subbar/barcode.hpp"
#include "subbar/barcode_functor.hpp"
#include "subbar/induced.hpp"
#include "subbar/interval.hpp"
#include "subbar/io.hpp"
#include "subbar/matching.hpp"
#include "subbar/persistence.hpp"
#include "subbar/simplicial.hpp"
#include "subbar/subbarcode.hpp"
#include "subbar/svg.hpp"
