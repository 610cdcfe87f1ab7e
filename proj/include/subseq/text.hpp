#pragma once

#include <string>
#include <string_view>

namespace subseq {

/// A character is a Unicode code point; byte inputs map each byte to 0..255.
using Symbol = char32_t;
using Text = std::u32string;
using TextView = std::u32string_view;

/// Each byte becomes one symbol.
Text text_from_bytes(std::string_view bytes);

/// Decodes UTF-8. Throws ParameterError on malformed input.
Text text_from_utf8(std::string_view utf8);

/// Encodes a single code point as UTF-8.
std::string utf8_encode(Symbol symbol);

std::string utf8_encode(TextView text);

}  // namespace subseq
