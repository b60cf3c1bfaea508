#pragma once

#include "locc/certify.hpp"
#include "locc/eigen.hpp"
#include "locc/matrix.hpp"
#include "locc/measures.hpp"
#include "locc/scan.hpp"
#include "locc/states.hpp"
