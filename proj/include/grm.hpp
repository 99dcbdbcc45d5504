#pragma once

#include "grm/error.hpp"
#include "grm/field.hpp"
#include "grm/poly.hpp"
#include "grm/linalg.hpp"
#include "grm/geometry.hpp"
#include "grm/code.hpp"
#include "grm/classify.hpp"
#include "grm/search.hpp"
#include "grm/blocking.hpp"
#include "grm/io.hpp"
#include "grm/selftest.hpp"
