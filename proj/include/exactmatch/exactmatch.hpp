#pragma once

#include "exactmatch/blue_matcher.hpp"
#include "exactmatch/core.hpp"
#include "exactmatch/exact_solver.hpp"
#include "exactmatch/generator.hpp"
#include "exactmatch/io.hpp"
#include "exactmatch/oracle.hpp"
#include "exactmatch/permanent.hpp"
