#pragma once

#include "roughbound/certificates.hpp"
#include "roughbound/io.hpp"
#include "roughbound/partitions.hpp"
#include "roughbound/polynomial.hpp"
#include "roughbound/rational.hpp"
#include "roughbound/set_partition.hpp"
#include "roughbound/weights.hpp"
