#pragma once

#include "opradii/bounds.hpp"
#include "opradii/harness.hpp"
#include "opradii/io.hpp"
#include "opradii/linalg.hpp"
#include "opradii/models.hpp"
#include "opradii/poly_roots.hpp"
#include "opradii/radii.hpp"
#include "opradii/rational.hpp"
#include "opradii/rng.hpp"
#include "opradii/trigpoly.hpp"
