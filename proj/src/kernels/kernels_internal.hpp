// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

#include "belseq/kernels.hpp"

namespace belseq::kernels::detail {

// Shared by both backends: for var < 6 the cofactors live in the same word.
bool in_word_cofactors_differ(std::span<const std::uint64_t> table, unsigned var, unsigned num_vars);
void in_word_exists(std::span<std::uint64_t> table, unsigned var, unsigned num_vars);

#if defined(BELSEQ_HAVE_AVX2)
const Ops& avx2_table();
#endif

}  // namespace belseq::kernels::detail
