#pragma once

#include "ribbon3/fusion/dimensions.hpp"
#include "ribbon3/fusion/ring.hpp"
