#pragma once

#include "adjrep/poly.hpp"

// Hot loops with a serial reference and an OpenMP variant. The parallel
// versions must return results identical to the serial ones.
namespace adjrep::kernels {

Poly::TermMap multiply_serial(const Poly::TermMap& a, const Poly::TermMap& b);
Poly::TermMap multiply_parallel(const Poly::TermMap& a, const Poly::TermMap& b);

/// Picks the parallel kernel for large products when more than one thread is available.
Poly::TermMap multiply(const Poly::TermMap& a, const Poly::TermMap& b);

/// Product size (terms of a times terms of b) above which multiply() goes parallel.
inline constexpr std::size_t kParallelProductThreshold = 4096;

int max_threads();

}  // namespace adjrep::kernels
