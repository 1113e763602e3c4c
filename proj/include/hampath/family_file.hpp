#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hampath/graph_core.hpp"

namespace hampath {

/// Raised on malformed input; the CLI maps it to exit code 2.
struct FamilyFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk family of Hamiltonian paths. The plain-line format is the
/// canonical interchange: a "n m" header, then m lines of n vertex ids,
/// each line a canonical path. The structured JSON document carries the
/// same data plus metadata. Duplicate paths parse fine and are left for
/// the verifier to flag.
struct FamilyFile {
    int n = 0;
    std::vector<HamPath> paths;

    // doc-format metadata; empty strings are omitted on write
    std::string predicate;
    std::string generator_version;
    std::string construction;

    static FamilyFile read(std::istream& in);
    static FamilyFile read_file(const std::string& path);

    void write_lines(std::ostream& out) const;
    void write_doc(std::ostream& out) const;
    void write_file(const std::string& path, const std::string& format) const;
};

}  // namespace hampath
