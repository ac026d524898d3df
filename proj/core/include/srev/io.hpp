#pragma once

#include "srev/operators.hpp"
#include "srev/spheres.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srev::io {

class FormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Contents of a system file:
///   {"atoms":["p","q"], "ranks":{"11":0,"10":1,"01":2,"00":null}, "cutoff":1}
/// Rank keys are world bitstrings in atom order; null or a missing key marks
/// an implausible world. Without "cutoff" the file describes a full Grove
/// system and implausible worlds are rejected.
struct SystemFile
{
    Signature sig;
    std::vector< Rank > ranks;
    std::optional< std::uint32_t > cutoff;

    [[nodiscard]] bool has_implausible() const;
    // Throws FormatError if some world is implausible.
    [[nodiscard]] SphereSystem full() const;
    // A file without a cutoff reads as a one-level system (every sphere inner).
    [[nodiscard]] TwoLevelSystem two_level() const;
};

SystemFile parse_system( std::string_view json_text );
SystemFile read_system_file( const std::filesystem::path& path );

// Single-line JSON, ranks listed from the all-true world down.
std::string write_system( const TwoLevelSystem& t );
std::string write_system( const SphereSystem& g );

/// Operator table file:
///   {"atoms":[...], "K":"<0x bitmask or formula>", "entries":{"0x0":"0x8", ...}}
/// Tables are total: every proposition needs an entry.
ExtensionalOperator parse_table( std::string_view json_text );
ExtensionalOperator read_table_file( const std::filesystem::path& path );
std::string write_table( const ExtensionalOperator& op );

// "0x..." is read as a bitmask, anything else as a formula.
Proposition parse_k( std::string_view text, const Signature& sig );

std::string read_text_file( const std::filesystem::path& path );

} // namespace srev::io
