#ifndef SPECHT_SPECHT_HPP
#define SPECHT_SPECHT_HPP

#include "character.hpp"
#include "decompose.hpp"
#include "error.hpp"
#include "partition.hpp"
#include "schur.hpp"
#include "special.hpp"

#endif // SPECHT_SPECHT_HPP
