#pragma once

/// Everything in one include.

#include "squig/bigint.hpp"
#include "squig/constants.hpp"
#include "squig/derivpoly.hpp"
#include "squig/errors.hpp"
#include "squig/evalcore.hpp"
#include "squig/explicit.hpp"
#include "squig/factors.hpp"
#include "squig/io.hpp"
#include "squig/series.hpp"
#include "squig/triangle.hpp"
#include "squig/verify.hpp"
