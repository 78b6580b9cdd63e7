#pragma once

#include "arith2.hpp"
#include "automorphism.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hom_check.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "structure.hpp"
#include "verify.hpp"
