// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "belseq/kernels.hpp"
#include "kernels_internal.hpp"

namespace belseq::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(BELSEQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops* initial_backend() {
    if (const char* env = std::getenv("BELSEQ_KERNELS"); env != nullptr && std::string(env) == "scalar")
        return &scalar_ops();
    if (const Ops* fast = avx2_ops()) return fast;
    return &scalar_ops();
}

std::atomic<const Ops*>& current() {
    static std::atomic<const Ops*> ops{initial_backend()};
    return ops;
}

}  // namespace

const Ops* avx2_ops() {
#if defined(BELSEQ_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const Ops& active() { return *current().load(std::memory_order_relaxed); }

void select(Backend backend) {
    if (backend == Backend::scalar) {
        current().store(&scalar_ops());
        return;
    }
    const Ops* fast = avx2_ops();
    if (fast == nullptr) throw std::runtime_error("AVX2 kernels are not available on this machine");
    current().store(fast);
}

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

}  // namespace belseq::kernels
