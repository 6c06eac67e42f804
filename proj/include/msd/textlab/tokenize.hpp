#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace msd::textlab {

using TokenList = std::vector<std::string>;

/// Splits UTF-8 text on Unicode whitespace (plus the ASCII separators
/// U+001C..U+001F), strips leading and trailing punctuation from each token,
/// lowercases ASCII and Latin-1 letters and drops empty tokens. Invalid UTF-8
/// bytes are kept verbatim.
TokenList tokenize(std::string_view text);

/// First `length` tokens (all of them when shorter).
TokenList truncate_tokens(const TokenList& tokens, std::size_t length);

}  // namespace msd::textlab
