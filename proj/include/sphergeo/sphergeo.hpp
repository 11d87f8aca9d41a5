#pragma once

// Umbrella header for the sphergeo library.

#include "sphergeo/core.hpp"
#include "sphergeo/holonomy.hpp"
#include "sphergeo/mesh.hpp"
#include "sphergeo/mesh_io.hpp"
#include "sphergeo/polygon.hpp"
