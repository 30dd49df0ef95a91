#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace spackgen {

// One command invocation from a CMake listfile: lowercased command name plus
// its arguments with quoting/bracket syntax resolved. The scan is lexical:
// variables and generator expressions are left unresolved in the arg text.
struct CMakeCommand {
    std::string name;                // lowercased
    std::vector<std::string> args;   // unquoted/unbracketed argument tokens
    std::string raw;                 // original invocation text
    int line = 0;
};

// Tolerant of malformed regions: anything that does not look like a command
// invocation is skipped.
std::vector<CMakeCommand> scan_cmake(std::string_view text);

}  // namespace spackgen
