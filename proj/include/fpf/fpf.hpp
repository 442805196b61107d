// Umbrella header.
#pragma once

#include "fpf/atoms.hpp"
#include "fpf/bigint.hpp"
#include "fpf/census.hpp"
#include "fpf/involution.hpp"
#include "fpf/laurent.hpp"
#include "fpf/notation.hpp"
#include "fpf/partition.hpp"
#include "fpf/permutation.hpp"
#include "fpf/pfaffian.hpp"
#include "fpf/schubert.hpp"
#include "fpf/symfunc.hpp"
#include "fpf/transition.hpp"
#include "fpf/vexillary.hpp"
