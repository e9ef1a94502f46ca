#include "rahecke/presentations.hpp"

#include <string>

#include "rahecke/errors.hpp"

namespace rahecke::presentations {

namespace {

// Lowercase letters in order, skipping "e", which denotes the identity.
std::vector<std::string> letters(std::size_t n) {
  if (n > 25) throw InputError("standard presentations use at most 25 single-letter generators");
  std::vector<std::string> out;
  for (char c = 'a'; out.size() < n; ++c) {
    if (c != 'e') out.emplace_back(1, c);
  }
  return out;
}

}  // namespace

CoxeterSystem cycle(std::size_t n) {
  std::vector<std::pair<GeneratorId, GeneratorId>> edges;
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      edges.emplace_back(static_cast<GeneratorId>(i), static_cast<GeneratorId>((i + 1) % n));
    }
  } else if (n == 2) {
    edges.emplace_back(0, 1);
  }
  return CoxeterSystem(letters(n), edges);
}

CoxeterSystem pentagon() { return cycle(5); }

CoxeterSystem free_product(std::size_t n) { return CoxeterSystem(letters(n), {}); }

CoxeterSystem complete(std::size_t n) {
  std::vector<std::pair<GeneratorId, GeneratorId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<GeneratorId>(i), static_cast<GeneratorId>(j));
  }
  return CoxeterSystem(letters(n), edges);
}

CoxeterSystem path(std::size_t n) {
  std::vector<std::pair<GeneratorId, GeneratorId>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<GeneratorId>(i), static_cast<GeneratorId>(i + 1));
  return CoxeterSystem(letters(n), edges);
}

}  // namespace rahecke::presentations
