#pragma once

#include "ribbon3/exactnum/ball.hpp"
#include "ribbon3/exactnum/int_poly.hpp"
#include "ribbon3/exactnum/number_field.hpp"
#include "ribbon3/exactnum/rational.hpp"
#include "ribbon3/exactnum/real_algebraic.hpp"
#include "ribbon3/exactnum/root_of_unity.hpp"
