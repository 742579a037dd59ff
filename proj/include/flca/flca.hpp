#pragma once

#include "atom.hpp"
#include "derived.hpp"
#include "error.hpp"
#include "group.hpp"
#include "hom_tensor.hpp"
#include "k0.hpp"
#include "structure.hpp"
