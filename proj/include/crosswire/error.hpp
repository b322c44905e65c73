#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace crosswire {

enum class ErrorKind {
  invalid_digit,
  invalid_vertex,
  incompatible_trees,
  invalid_radius,
  alignment,
  domain,
  modulus_mismatch,
  invalid_modulus,
  parse,
  uncertified,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_digit: return "invalid-digit";
    case ErrorKind::invalid_vertex: return "invalid-vertex";
    case ErrorKind::incompatible_trees: return "incompatible-trees";
    case ErrorKind::invalid_radius: return "invalid-radius";
    case ErrorKind::alignment: return "alignment";
    case ErrorKind::domain: return "domain";
    case ErrorKind::modulus_mismatch: return "modulus-mismatch";
    case ErrorKind::invalid_modulus: return "invalid-modulus";
    case ErrorKind::parse: return "parse";
    case ErrorKind::uncertified: return "uncertified";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <class Map>
std::size_t hash_sparse(const Map& map, std::size_t seed) {
  for (const auto& [key, value] : map) {
    hash_combine(seed, std::hash<typename Map::key_type>{}(key));
    hash_combine(seed, std::hash<typename Map::mapped_type>{}(value));
  }
  return seed;
}

}  // namespace detail
}  // namespace crosswire
