// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "belseq/formula.hpp"

namespace belseq::detail {

bool dpll_satisfiable(std::span<const Formula> fs);

}  // namespace belseq::detail
