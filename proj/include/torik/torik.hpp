#pragma once

#include "torik/core.hpp"
#include "torik/laurent.hpp"
#include "torik/localized.hpp"
#include "torik/series.hpp"
#include "torik/fan.hpp"
#include "torik/divisor.hpp"
#include "torik/multiplicity.hpp"
#include "torik/pexp.hpp"
#include "torik/euler.hpp"
