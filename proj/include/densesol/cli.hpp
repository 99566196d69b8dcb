#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "densesol/group.hpp"

namespace densesol::cli {

enum class OutputFormat { Text, Json, Dot };

std::optional<OutputFormat> parse_output_format(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInvalid = 2;

/// Version tag of every JSON document the CLI emits.
inline constexpr int kJsonSchema = 1;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // for stdout
  std::string error;   // for stderr; empty on success
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Group spec mini-language: zm:m,n,r | cyclic:n | dihedral:n | quaternion:k.
FiniteGroup parse_group_spec(std::string_view spec, std::size_t cap = kDefaultOrderCap);

CommandResult cmd_zm_info(long long m, long long n, long long r, OutputFormat format,
                          std::size_t cap = kDefaultOrderCap);
CommandResult cmd_lattice(std::string_view spec, OutputFormat format,
                          std::size_t cap = kDefaultOrderCap);
CommandResult cmd_density(std::string_view spec, OutputFormat format,
                          std::size_t cap = kDefaultOrderCap);
CommandResult cmd_verify(std::size_t max_order, OutputFormat format,
                         std::size_t cap = kDefaultOrderCap, unsigned threads = 0);

}  // namespace densesol::cli
