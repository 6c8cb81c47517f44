#pragma once

#include "wreath/algebra.hpp"
#include "wreath/endo.hpp"
#include "wreath/error.hpp"
#include "wreath/mackey.hpp"
#include "wreath/permutation.hpp"
#include "wreath/structure.hpp"
#include "wreath/subgroup.hpp"
#include "wreath/tree_automorphism.hpp"
