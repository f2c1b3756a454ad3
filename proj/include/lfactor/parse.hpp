#pragma once

#include <string>

#include "lfactor/lfactor.hpp"

namespace lfac {

// gl:n | gsp:2n | simple:X:r:adj|sc | @path
RootDatum parse_group(const std::string& spec);

// `rank k`, `simples m`, m root lines, m coroot lines; `#` starts a comment.
RootDatum parse_datum_text(const std::string& text, const std::string& label);
RootDatum load_datum_file(const std::string& path);

// "generic" or a comma-separated list of nonzero rationals such as "2,3,1/2".
UnramifiedCharacter parse_character(const std::string& spec, int rank);

}  // namespace lfac
