#pragma once
// Text format:
//   gpea <n>
//   labels <name> ...        (optional, n names)
//   sum <i> <j> <k>          (e_i + e_j = e_k)
//   # comment
// Sums with 0 as an operand are filled in where absent.

#include <cstddef>
#include <string>

#include "gpea/errors.hpp"
#include "gpea/finite_gpea.hpp"

namespace gpea {

class ModelSyntaxError : public UsageError {
 public:
  ModelSyntaxError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The raw table and labels of a model file, before validation.
struct ParsedModel {
  SumTable table;
  std::vector<std::string> labels;
};

/// Throws ModelSyntaxError.
ParsedModel parse_table(const std::string& text);
/// Throws ModelSyntaxError, or InvalidModel when the table violates an axiom.
FiniteGpea parse_model(const std::string& text);
/// Canonical text: sum lines sorted, sums with a 0 operand omitted.
std::string serialize_model(const FiniteGpea& e);

/// Reads a file; throws UsageError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace gpea
