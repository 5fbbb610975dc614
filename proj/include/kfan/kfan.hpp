#pragma once

#include "cone.hpp"
#include "corpus.hpp"
#include "fan.hpp"
#include "groth.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "mckay.hpp"
#include "numeric.hpp"
#include "refine.hpp"
#include "sod.hpp"
#include "stringy.hpp"
#include "wall.hpp"
