#pragma once

#include "charpoly/engine.hpp"
#include "charpoly/hessenberg.hpp"
#include "charpoly/lab.hpp"
#include "charpoly/linalg.hpp"
#include "charpoly/matrix.hpp"
#include "charpoly/matrix_gen.hpp"
#include "charpoly/matrix_io.hpp"
#include "charpoly/poly.hpp"
#include "charpoly/reference.hpp"
#include "charpoly/scalar.hpp"
