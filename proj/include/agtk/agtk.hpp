#ifndef AGTK_AGTK_HPP_
#define AGTK_AGTK_HPP_

#include "ca_test.hpp"
#include "census.hpp"
#include "enumerate.hpp"
#include "expression.hpp"
#include "fixtures.hpp"
#include "iso.hpp"
#include "magma.hpp"
#include "properties.hpp"
#include "search.hpp"
#include "theorems.hpp"

#endif  // AGTK_AGTK_HPP_
