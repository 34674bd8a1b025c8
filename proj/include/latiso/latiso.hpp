#pragma once

#include "latiso/error.hpp"
#include "latiso/lattice.hpp"
#include "latiso/symmetry.hpp"
#include "latiso/boxes.hpp"
#include "latiso/wangwang.hpp"
#include "latiso/classify.hpp"
#include "latiso/graphmin.hpp"
#include "latiso/oracle.hpp"
#include "latiso/io.hpp"
