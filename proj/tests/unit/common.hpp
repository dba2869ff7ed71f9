#pragma once

#include <gtest/gtest.h>

#include <string>

#include "wsa/wsa.hpp"

namespace wsa::test {

using Alg = QuotientAlgebra<PrimeField>;

inline std::string data_path(const std::string& name) { return std::string(WSA_DATA_DIR) + "/" + name; }

inline WeightedPresentation seeded(const std::string& entry, std::uint64_t seed = 7) {
  return WeightedPresentation::make(seeded_parameters(catalog(entry), seed));
}

inline Alg build(const WeightedPresentation& p) { return Alg::build(p, PrimeField(p.field().characteristic)); }

/// Runs `fn` and reports the kind of the wsa::Error it throws.
template <class Fn>
std::optional<ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace wsa::test
