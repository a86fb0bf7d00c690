#include "adjrep/kernels.hpp"

#include <omp.h>

#include <vector>

namespace adjrep::kernels {

namespace {

void accumulate(Poly::TermMap& out, Exponents e, const Rational& c) {
  auto [it, inserted] = out.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void multiply_range(const std::vector<const std::pair<const Exponents, Rational>*>& a_terms,
                    std::size_t begin, std::size_t end, const Poly::TermMap& b,
                    Poly::TermMap& out) {
  for (std::size_t i = begin; i < end; ++i) {
    const auto& [ea, ca] = *a_terms[i];
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      accumulate(out, std::move(e), ca * cb);
    }
  }
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

Poly::TermMap multiply_serial(const Poly::TermMap& a, const Poly::TermMap& b) {
  Poly::TermMap out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      accumulate(out, std::move(e), ca * cb);
    }
  }
  return out;
}

Poly::TermMap multiply_parallel(const Poly::TermMap& a, const Poly::TermMap& b) {
  std::vector<const std::pair<const Exponents, Rational>*> a_terms;
  a_terms.reserve(a.size());
  for (const auto& t : a) a_terms.push_back(&t);

  const int threads = omp_get_max_threads();
  std::vector<Poly::TermMap> partial(static_cast<std::size_t>(threads));
  const std::size_t n = a_terms.size();

#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    const auto nt = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t begin = n * tid / nt;
    const std::size_t end = n * (tid + 1) / nt;
    multiply_range(a_terms, begin, end, b, partial[tid]);
  }

  // Exact addition is order independent, so merging in thread order is deterministic.
  Poly::TermMap out = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (auto& [e, c] : partial[t]) accumulate(out, e, c);
  }
  return out;
}

Poly::TermMap multiply(const Poly::TermMap& a, const Poly::TermMap& b) {
  if (a.size() * b.size() >= kParallelProductThreshold && omp_get_max_threads() > 1) {
    return multiply_parallel(a, b);
  }
  return multiply_serial(a, b);
}

}  // namespace adjrep::kernels
