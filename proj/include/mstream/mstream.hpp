// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "engine.hpp"
#include "exact_matcher.hpp"
#include "kdifference_matcher.hpp"
#include "kmismatch_matcher.hpp"
#include "oracles.hpp"
#include "pattern_space.hpp"
#include "stream_lce.hpp"
#include "types.hpp"
