#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "discont/connect.hpp"
#include "discont/discrete_set.hpp"
#include "discont/sampled_function.hpp"

namespace discont {

enum class DatasetKind { set, function, subset };

struct Dataset {
  DatasetKind kind = DatasetKind::set;
  std::variant<std::monostate, DiscreteSet, SampledFunction, RealSubset>
      payload;
  std::string source;
};

/// Parses dataset text. Inputs whose first non-blank character is '['
/// are JSON (array of numbers for sets, of [x, y] pairs for functions,
/// of [lo, hi] pairs for subsets); everything else is CSV with a
/// mandatory header row: column `x` for sets and subsets (points become
/// isolated pieces), columns `x,y` for functions. Decimal parsing is
/// loss-free for doubles. Constructor rejections surface as ParseError
/// with the offending line and the constructor's code.
Dataset parse_dataset(std::string_view text, std::string_view source_name,
                      DatasetKind kind, double tol = 0.0);

/// Reads path_or_dash ("-" means standard input) and parses it.
Dataset load_dataset(const std::string& path_or_dash, DatasetKind kind,
                     double tol = 0.0);

}  // namespace discont
