#pragma once
#include "golomb/base.hpp"
#include "golomb/checkpoint.hpp"
#include "golomb/format.hpp"
#include "golomb/formula.hpp"
#include "golomb/legendre.hpp"
#include "golomb/pi_stream.hpp"
#include "golomb/precise.hpp"
#include "golomb/scanner.hpp"
#include "golomb/sieve.hpp"
#include "golomb/table1.hpp"
#include "golomb/thresholds.hpp"
