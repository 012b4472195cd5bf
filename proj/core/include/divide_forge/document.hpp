#pragma once

// JSON divide documents (format_version "1").
//
//   {
//     "format_version": "1",
//     "free_loops": 0,
//     "metadata": {"expected": {"c": 2, "g": 1, "h": 1, "k": 4, "v": 2}, "name": "..."},
//     "vertices": [[0, 2, 1, 3], ...]
//   }
//
// Each vertex lists its four darts counterclockwise; dart d is paired with
// d ^ 1. "free_loops" and "metadata" are optional.

#include <optional>
#include <string>
#include <string_view>

#include "divide_forge/divide.hpp"

namespace dforge {

struct ExpectedInvariants {
  std::optional<int> g, c, v, k, h;

  bool empty() const noexcept { return !g && !c && !v && !k && !h; }
};

struct DocumentMetadata {
  std::optional<std::string> name;
  ExpectedInvariants expected;
};

struct DivideDocument {
  Divide divide;
  DocumentMetadata metadata;
};

/// Throws SyntaxError (with byte position), SchemaError, or InvariantMismatch
/// when the expected invariants disagree with the traced ones.
DivideDocument parse_document(std::string_view text);
Divide parse_divide(std::string_view text);

/// Pretty JSON with sorted keys, one vertex per line. Maps whose pairing is
/// not d ^ 1 are relabeled first.
std::string emit_document(const DivideDocument& doc);
std::string emit_divide(const Divide& divide, const DocumentMetadata& metadata = {});

/// The divide relabeled so that every edge is {2i, 2i + 1}; unchanged when it
/// already is.
Divide xor_paired(const Divide& divide);

/// Expected invariants filled from the divide (all five fields).
ExpectedInvariants traced_invariants(const Divide& divide);

}  // namespace dforge
