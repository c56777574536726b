#pragma once

#include <string_view>

#include "eulercert/field.hpp"

namespace eulercert {

/// Parses the exact textual element syntax shared by all file formats:
/// rationals as `p/q` or `p`, Q(sqrt(d)) elements as `p/q+r/s*sqrt(d)`, and
/// Q(t) elements as polynomial expressions in `t` with `/` as the divider,
/// e.g. `(t^2-1)/(t-1)`.  General exact expressions over +, -, *, /, ^ and
/// parentheses are accepted; floating literals are not.
FieldElement parse_element(std::string_view text, const FieldDesc& field);

/// Parses a field descriptor: `rational`, `quad <d>` or `ratfunc`.
/// `rest` receives anything after the descriptor.
FieldDesc parse_field_desc(std::string_view text);

}  // namespace eulercert
