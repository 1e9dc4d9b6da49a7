#include <array>
#include <utility>

#include "copzero/common.hpp"
#include "copzero/fixtures.hpp"

namespace copzero {

namespace {

constexpr std::array<std::pair<const char*, const char*>, 5> kFixtures{{
    {"example-x",
     "0 0 1 1 1\n"
     "0 0 1 1 1\n"
     "1 1 0 0 1\n"
     "1 1 0 0 1\n"
     "1 1 1 1 1\n"},
    {"example-xbar",
     "1 -1 1 1 -1\n"
     "-1 1 -1 1 1.5\n"
     "1 -1 1 -0.5 1.5\n"
     "1 1 -0.5 1 -1\n"
     "-1 1.5 1.5 -1 1\n"},
    {"horn",
     "1 -1 1 1 -1\n"
     "-1 1 -1 1 1\n"
     "1 -1 1 -1 1\n"
     "1 1 -1 1 -1\n"
     "-1 1 1 -1 1\n"},
    {"identity-3",
     "1 0 0\n"
     "0 1 0\n"
     "0 0 1\n"},
    {"zero-3",
     "0 0 0\n"
     "0 0 0\n"
     "0 0 0\n"},
}};

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : kFixtures) out.emplace_back(name);
  return out;
}

std::string fixture_text(const std::string& name) {
  for (const auto& [n, text] : kFixtures)
    if (name == n) return text;
  throw ParseError("unknown fixture '" + name + "'");
}

}  // namespace copzero
