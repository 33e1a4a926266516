#pragma once

#include <memory>
#include <string>
#include <vector>

#include "powerag/ag_code.hpp"

namespace powerag {

// Builds a code from a JSON description. Keys:
//   curve   "rational" | "hermitian"            (required)
//   q       curve parameter                     (hermitian only, required)
//   field   {"p": ..., "m": ...}                (rational: required;
//                                                hermitian: optional check
//                                                against GF(q^2))
//   gamma   pole order of the code divisor      (required)
//   n       evaluation length                   (optional; default: all
//                                                affine places)
std::shared_ptr<const CodeSpec> code_from_config(const std::string& json_text);
std::shared_ptr<const CodeSpec> code_from_file(const std::string& path);

// comma-separated element lists, the wire format used by the CLI
std::vector<std::uint16_t> parse_symbols(const std::string& text, const Field& field);
std::string format_symbols(std::span<const std::uint16_t> symbols);

}  // namespace powerag
