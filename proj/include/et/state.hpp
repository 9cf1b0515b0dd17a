#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "et/dims.hpp"
#include "et/field.hpp"
#include "et/rng.hpp"

#include <json.hpp>

namespace et {

enum class Backend { PrimeField, ComplexFloat };

// A state: nonzero coefficients over the lattice of a Dims. Coefficients are
// stored sparsely, sorted by offset; the key set IS the support, so L(v) is
// the number of stored entries. Immutable after construction.
class State {
 public:
  using FpEntry = std::pair<uint32_t, uint64_t>;
  using CxEntry = std::pair<uint32_t, std::complex<double>>;

  static State prime_field(Dims dims, std::vector<FpEntry> coeffs, uint64_t prime = kPrimaryPrime) {
    State s(std::move(dims), Backend::PrimeField, prime);
    std::sort(coeffs.begin(), coeffs.end());
    for (const auto& [off, v] : coeffs) {
      if (off >= static_cast<uint64_t>(s.dims_.total())) throw std::out_of_range("State: offset out of range");
      if (v % prime == 0) throw std::invalid_argument("State: zero coefficient stored");
    }
    s.fp_ = std::move(coeffs);
    return s;
  }

  static State complex_float(Dims dims, std::vector<CxEntry> coeffs) {
    State s(std::move(dims), Backend::ComplexFloat, 0);
    std::sort(coeffs.begin(), coeffs.end(), [](const CxEntry& a, const CxEntry& b) { return a.first < b.first; });
    for (const auto& [off, v] : coeffs) {
      if (off >= static_cast<uint64_t>(s.dims_.total())) throw std::out_of_range("State: offset out of range");
      if (v == std::complex<double>{}) throw std::invalid_argument("State: zero coefficient stored");
    }
    s.cx_ = std::move(coeffs);
    return s;
  }

  const Dims& dims() const { return dims_; }
  Backend backend() const { return backend_; }
  uint64_t prime() const { return prime_; }
  size_t length() const { return backend_ == Backend::PrimeField ? fp_.size() : cx_.size(); }

  const std::vector<FpEntry>& fp_coeffs() const { return fp_; }
  const std::vector<CxEntry>& cx_coeffs() const { return cx_; }

  Support support() const {
    std::vector<uint32_t> off;
    if (backend_ == Backend::PrimeField)
      for (const auto& e : fp_) off.push_back(e.first);
    else
      for (const auto& e : cx_) off.push_back(e.first);
    return Support(dims_, std::move(off));
  }

  nlohmann::json to_json() const;
  static State from_json(const nlohmann::json& j);

 private:
  State(Dims dims, Backend backend, uint64_t prime)
      : dims_(std::move(dims)), backend_(backend), prime_(prime) {}

  Dims dims_;
  Backend backend_;
  uint64_t prime_;
  std::vector<FpEntry> fp_;
  std::vector<CxEntry> cx_;
};

// Independent uniform values in [1, p-1] on the given support; deterministic
// in (support, seed, p).
inline State random_state(const Support& support, uint64_t seed, uint64_t prime = kPrimaryPrime) {
  SplitMix64 rng(seed);
  std::vector<State::FpEntry> coeffs;
  coeffs.reserve(support.length());
  for (uint32_t off : support.offsets()) coeffs.emplace_back(off, rng.nonzero_mod(prime));
  return State::prime_field(support.dims(), std::move(coeffs), prime);
}

// All coefficients 1; used for the constructed symmetric states.
inline State unit_state(const Support& support, uint64_t prime = kPrimaryPrime) {
  std::vector<State::FpEntry> coeffs;
  coeffs.reserve(support.length());
  for (uint32_t off : support.offsets()) coeffs.emplace_back(off, 1);
  return State::prime_field(support.dims(), std::move(coeffs), prime);
}

// Keep exactly the coefficients with every index j_i <= new_dims[i].
State truncate(const State& state, const Dims& new_dims);

}  // namespace et
