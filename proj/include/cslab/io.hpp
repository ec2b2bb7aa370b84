#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "cslab/bitstring.hpp"
#include "cslab/codegen.hpp"
#include "cslab/reducer.hpp"

// Text formats. Bit strings are written as 0/1 characters, position 1 first.
//
//   graph:     "n m k", then m lines "u v" (1-indexed); '#' starts a comment
//   code:      "l alpha beta delta n", then n codewords
//   instance:  "N L d", then N constraints

namespace cslab::io {

/// Schema tag of the instance manifest; bumped when the tag scheme changes.
inline constexpr int provenance_scheme_version = 1;

CliqueInstance read_graph(std::istream& in);
void write_graph(std::ostream& out, const CliqueInstance& g);

SelectionCode read_code(std::istream& in);
void write_code(std::ostream& out, const SelectionCode& code);

/// An instance as read back from disk: no provenance, just the strings.
struct PlainInstance {
    std::size_t length = 0;
    std::size_t d = 0;
    std::vector<BitString> constraints;
};

PlainInstance read_instance(std::istream& in);
void write_instance(std::ostream& out, const ClosestStringInstance& inst);
void write_instance(std::ostream& out, const PlainInstance& inst);

nlohmann::json instance_manifest(const ClosestStringInstance& inst);

// File wrappers; FileError when the path cannot be opened.
CliqueInstance load_graph(const std::filesystem::path& path);
SelectionCode load_code(const std::filesystem::path& path);
PlainInstance load_instance(const std::filesystem::path& path);

}  // namespace cslab::io
