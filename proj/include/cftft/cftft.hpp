#pragma once

#include "cftft/bench.hpp"
#include "cftft/field.hpp"
#include "cftft/polymul.hpp"
#include "cftft/transform.hpp"
#include "cftft/verify.hpp"
#include "cftft/view.hpp"
