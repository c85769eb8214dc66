// Umbrella header.
#pragma once

#include "nquiver/bimodule.hpp"
#include "nquiver/io.hpp"
#include "nquiver/kp.hpp"
#include "nquiver/linalg.hpp"
#include "nquiver/momentmap.hpp"
#include "nquiver/quiver.hpp"
#include "nquiver/rational.hpp"
#include "nquiver/roots.hpp"
#include "nquiver/sigma.hpp"
#include "nquiver/strata.hpp"
