#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vcount/finite_field.hpp"
#include "vcount/int_types.hpp"
#include "vcount/poly_system.hpp"
#include "vcount/staircase.hpp"

namespace vcount {

/// A field-element literal as written in a document: a plain integer for
/// prime fields, or a quoted polynomial in t ("1+2*t") for extension fields.
/// Polynomial coefficient lists are stored lowest degree first with trailing
/// zeros trimmed.
struct ElementLiteral {
  bool is_poly = false;
  std::int64_t value = 0;
  std::vector<std::int64_t> poly;

  friend bool operator==(const ElementLiteral&, const ElementLiteral&) = default;
};

/// One monomial term; the separator sign is folded into the coefficient.
struct TermExpr {
  ElementLiteral coef;                                         // defaults to 1
  std::vector<std::pair<std::uint32_t, std::uint32_t>> powers;  // (index >= 1, exponent)

  friend bool operator==(const TermExpr&, const TermExpr&) = default;
};

struct EquationExpr {
  std::vector<TermExpr> terms;
  ElementLiteral rhs;

  friend bool operator==(const EquationExpr&, const EquationExpr&) = default;
};

struct FieldSpec {
  std::uint64_t p = 0;
  unsigned degree = 1;
  std::optional<std::vector<std::int64_t>> modulus;  // lowest degree first

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct OptionsBlock {
  std::optional<std::string> method;
  std::optional<std::string> output_format;
  std::optional<ElementLiteral> alpha;

  friend bool operator==(const OptionsBlock&, const OptionsBlock&) = default;
};

struct InputDocument {
  int format = 1;
  FieldSpec field;
  std::vector<EquationExpr> equations;
  OptionsBlock options;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Grammar: optional `format = 1`, a `field { ... }` block, one or more
/// `eq: <terms> = <const>` lines, an optional `options { ... }` block.
/// Whitespace-insensitive; `#` starts a line comment.  Throws parse_error
/// with line/column on syntax errors; semantic checks are deferred.
InputDocument parse_document(std::string_view text);

/// Canonical rendering; render(parse(s)) is a fixed point of parse+render.
std::string render_document(const InputDocument& doc);

FiniteField make_document_field(const FieldSpec& spec);
Fq element_from_literal(const FiniteField& field, const ElementLiteral& lit);

/// Oracle-ready system; accepts any equations (no staircase checks) but
/// enforces the document invariants (contiguous variables x1..xN).
PolySystem document_poly_system(const InputDocument& doc, const FiniteField& field);

/// Staircase view of the document; shape violations surface via validate().
StaircaseSystem document_staircase(const InputDocument& doc, const FiniteField& field);

/// Matrix text: one row per line of whitespace-separated integers; `#`
/// comments and an optional leading `format = 1` line are skipped.
IntMat parse_matrix_text(std::string_view text);
std::string render_matrix_text(const IntMat& m);

struct CongruenceFile {
  IntMat h;
  IntVec b;
  Int modulus;
};

/// Congruence input: `m = <int>`, an `H:` section of matrix rows, and a `B:`
/// section with one integer per matrix row.
CongruenceFile parse_congruence_text(std::string_view text);

}  // namespace vcount
