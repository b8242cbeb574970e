#pragma once

#include <optional>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace concordia::api {

struct ExampleEntry {
  std::string key;
  SeifertMatrix matrix;
  std::string description;
  // Expected output fields: "alexander" (coefficients, lowest first), "verdict", maybe "r".
  json expected;
};

// The canonical instances listed by `examples list`.
std::vector<ExampleEntry> example_registry();

// Any registry key, including parametric ones such as order2-a29 or
// order4-a7-p3. Throws InvalidArgument for unknown keys or parameters
// outside the family.
ExampleEntry lookup_example(const std::string& key);

}  // namespace concordia::api
