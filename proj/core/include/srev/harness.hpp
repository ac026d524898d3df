#pragma once

#include "srev/operators.hpp"
#include "srev/postulates.hpp"
#include "srev/spheres.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace srev {

inline constexpr std::size_t max_exhaustive_atoms = 2;
inline constexpr std::size_t max_sample_atoms = 3;
inline constexpr std::uint32_t default_sample_levels = 5;

enum class EnumerationMode
{
    exhaustive,
    sample,
};

class EnumerationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct EnumerationSpec
{
    Signature sig;
    // Fixed center. Unset: every consistent K (exhaustive) or a drawn center
    // (sample).
    std::optional< Proposition > k;
    EnumerationMode mode = EnumerationMode::exhaustive;
    std::size_t sample_count = 1000;
    std::optional< std::uint64_t > seed; // required in sample mode
    std::uint32_t max_levels = default_sample_levels;
};

// Throws EnumerationError when the spec exceeds the size caps or lacks a seed.
void validate_spec( const EnumerationSpec& spec );

// Canonical two-level systems: ranks contiguous from 0, every cutoff, every
// choice of implausible worlds. Exhaustive order: K by bitmask, then rank
// vectors, then cutoff. Sample mode draws uniformly over canonical rank
// vectors with at most max_levels levels, then a uniform cutoff.
std::vector< TwoLevelSystem > enumerate_systems( const EnumerationSpec& spec );

// Canonical full Grove systems (no implausible worlds), same conventions.
std::vector< SphereSystem > enumerate_grove_systems( const EnumerationSpec& spec );

std::string sampling_note( const EnumerationSpec& spec );

// Worker count from SPHERES_REV_THREADS, else the hardware concurrency.
unsigned default_threads();

struct DirectionReport
{
    bool applicable = true;
    bool pass = true;
    std::size_t checks = 0; // postulate and identity checks run
    std::vector< std::string > failures;

    void fail( std::string why );
};

std::string describe( Postulate p, const Verdict& v );

DirectionReport verify_direction_2_to_1( const TwoLevelSystem& t );
DirectionReport verify_direction_1_to_2( const ExtensionalOperator& odot );
DirectionReport verify_direction_1_to_3( const ExtensionalOperator& odot );

struct ObservationTally
{
    std::string name;
    std::size_t operators = 0;
    std::size_t premises_held = 0;
    std::size_t violations = 0;
    std::vector< std::string > witnesses;
};

// Implication checks for every catalogued observation over a population.
std::vector< ObservationTally > check_observations( std::span< const ExtensionalOperator > population,
                                                    unsigned threads = 1 );

struct SystemRecord
{
    std::string system; // system-file JSON
    DirectionReport two_to_one;
    DirectionReport one_to_two;
    DirectionReport one_to_three;

    [[nodiscard]] bool pass() const { return two_to_one.pass && one_to_two.pass && one_to_three.pass; }
};

struct TheoremReport
{
    std::size_t atoms = 0;
    EnumerationMode mode = EnumerationMode::exhaustive;
    std::string k;
    std::optional< std::uint64_t > seed;
    std::size_t requested = 0;
    std::string sampling;

    std::vector< SystemRecord > records;
    std::size_t distinct_tables = 0;
    std::size_t checks = 0;
    std::vector< ObservationTally > observations;

    [[nodiscard]] bool pass() const;
};

TheoremReport verify_theorem( const EnumerationSpec& spec, unsigned threads = 1 );
std::string to_text( const TheoremReport& r );
std::string to_json( const TheoremReport& r );

struct GroveRecord
{
    std::string system;
    std::vector< std::string > failures;
};

struct GroveReport
{
    std::size_t systems = 0;
    std::size_t revision_failures = 0;
    std::size_t contraction_failures = 0;
    std::size_t levi_harper_failures = 0;
    std::vector< GroveRecord > failing;

    [[nodiscard]] bool pass() const { return failing.empty(); }
};

// Revision and contraction tables of every full system pass the AGM
// postulates, and the Levi and Harper identities invert each other on them.
GroveReport verify_grove( const EnumerationSpec& spec, unsigned threads = 1 );

struct Mutant
{
    std::string name;
    std::string description;
    bool applicable = true;
    ExtensionalOperator table;
    SentenceProbe probe; // set only for the syntactic mutant
};

// Identity control first, then the fault-injecting mutants.
std::vector< Mutant > mutant_catalog( const TwoLevelSystem& base );

struct MutantResult
{
    std::string name;
    std::string description;
    bool applicable = true;
    std::vector< std::pair< Postulate, Witness > > failures;
    bool witnesses_replay = true;
};

struct MutationReport
{
    std::vector< MutantResult > results;

    // Control clean; every applicable mutant caught with replayable witnesses.
    [[nodiscard]] bool pass() const;
};

MutationReport run_mutation_tests( const TwoLevelSystem& base );
std::string to_text( const MutationReport& r, const Signature& sig );

} // namespace srev
