#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "revsyn/spec.hpp"

namespace revsyn {

/// TFC: `.v a,b,c`, optional `.i`, `.o` (ordered outputs), `.c` (values of
/// the non-input lines in line order), then `BEGIN`, gate lines such as
/// `t3 a,b',c` (trailing ' marks a negative control, last name is the
/// target), `END`. `#` starts a comment.
[[nodiscard]] Circuit parse_tfc(std::string_view text);
[[nodiscard]] std::string emit_tfc(const Circuit& c);

/// REAL: `.version`, `.numvars`, `.variables`, optional `.inputs` and
/// `.outputs` (ordered name lists), `.constants` (one of - 0 1 per line),
/// `.garbage`, then `.begin`, gate lines such as `t3 -a b c` (leading -
/// marks a negative control, last name is the target), `.end`.
[[nodiscard]] Circuit parse_real(std::string_view text);
[[nodiscard]] std::string emit_real(const Circuit& c);

/// `.n <inputs>` `.m <outputs>` then 2^n rows of m symbols from {0,1,-};
/// a row may be prefixed by its n input bits and a space.
[[nodiscard]] TruthTable parse_spec(std::string_view text);
[[nodiscard]] std::string emit_spec(const TruthTable& t);

enum class CircuitFormat { tfc, real };
/// By extension: .real is REAL, anything else TFC.
[[nodiscard]] CircuitFormat format_for(const std::filesystem::path& path);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);
[[nodiscard]] Circuit read_circuit(const std::filesystem::path& path);
void write_circuit(const std::filesystem::path& path, const Circuit& c);
[[nodiscard]] TruthTable read_spec(const std::filesystem::path& path);

}  // namespace revsyn
