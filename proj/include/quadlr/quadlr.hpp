#pragma once

// Long-range quadrupole-quadrupole interaction of a rotating 1Sigma_g+ dimer
// with an excited atom: angular algebra, interaction matrix, C5 spectra and
// the derived potential landscape.

#include "errors.hpp"
#include "units.hpp"
#include "wigner.hpp"
#include "linalg.hpp"
#include "interaction.hpp"
#include "species.hpp"
#include "spectra.hpp"
#include "landscape.hpp"
