#pragma once

#include <string>

namespace rr {

// Strict decoding rejects malformed input (bad bridges, inadmissible
// codewords, out-of-range indices). Lenient decoding never rejects: it maps
// whatever it reads onto the nearest well-formed interpretation, which keeps
// single-cell corruption localized to one block.
enum class DecodePolicy { Strict, Lenient };

std::string to_string(DecodePolicy policy);
DecodePolicy decode_policy_from_string(const std::string& s);

} // namespace rr
