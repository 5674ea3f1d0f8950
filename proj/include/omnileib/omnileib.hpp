#pragma once

// Umbrella header for the omnileib library: exact-rational Leibniz algebras,
// representations, Loday-Pirashvili-style cohomology, the insertion (Balavoine)
// bracket, omni-Lie algebras, omni-representations and omni-cohomology.

#include "omnileib/algebra.hpp"
#include "omnileib/balavoine.hpp"
#include "omnileib/catalog.hpp"
#include "omnileib/cochain.hpp"
#include "omnileib/cohomology.hpp"
#include "omnileib/io.hpp"
#include "omnileib/matrix.hpp"
#include "omnileib/omni.hpp"
#include "omnileib/rational.hpp"
#include "omnileib/representation.hpp"
