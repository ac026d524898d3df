#pragma once

#include "srev/logic.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace srev {

// Plausibility rank of a world; nullopt marks an implausible world that lies
// outside every sphere.
using Rank = std::optional< std::uint32_t >;

class SystemError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class TwoLevelSystem;

/// Grove system of spheres given by a total rank function. The spheres are
/// the level sets {w : rank(w) <= v} for every occurring v; the center is
/// rank^-1(0).
class SphereSystem
{
public:
    // Throws SystemError if the rank vector does not cover the universe or no
    // world has rank 0.
    SphereSystem( Signature sig, std::vector< std::uint32_t > ranks );

    [[nodiscard]] const Signature& sig() const noexcept { return sig_; }
    [[nodiscard]] std::uint32_t rank( World w ) const { return ranks_.at( w ); }
    [[nodiscard]] const std::vector< std::uint32_t >& ranks() const noexcept { return ranks_; }
    [[nodiscard]] Proposition center() const;
    [[nodiscard]] std::uint32_t max_rank() const;

    // The same spheres read as a two-level system with every sphere inner.
    [[nodiscard]] TwoLevelSystem as_two_level() const;

    friend bool operator==( const SphereSystem&, const SphereSystem& ) = default;

private:
    Signature sig_;
    std::vector< std::uint32_t > ranks_;
};

/// Two-level system (S_i, S): spheres with rank <= cutoff form the inner
/// family S_i, the remaining finite ranks the outer band of S.
class TwoLevelSystem
{
public:
    // Only the shape is checked here (one rank per world); use
    // validate_system for the structural conditions.
    TwoLevelSystem( Signature sig, std::vector< Rank > ranks, std::uint32_t cutoff );

    [[nodiscard]] const Signature& sig() const noexcept { return sig_; }
    [[nodiscard]] const Rank& rank( World w ) const { return ranks_.at( w ); }
    [[nodiscard]] const std::vector< Rank >& ranks() const noexcept { return ranks_; }
    [[nodiscard]] std::uint32_t cutoff() const noexcept { return cutoff_; }
    [[nodiscard]] Proposition center() const;
    // Worlds in some sphere of S.
    [[nodiscard]] Proposition plausible() const;

    friend bool operator==( const TwoLevelSystem&, const TwoLevelSystem& ) = default;

private:
    Signature sig_;
    std::vector< Rank > ranks_;
    std::uint32_t cutoff_;
};

struct Sphere
{
    Proposition worlds;
    bool inner;

    friend bool operator==( const Sphere&, const Sphere& ) = default;
};

// Strictly increasing chain, starting at the center.
std::vector< Proposition > spheres_of( const SphereSystem& g );
std::vector< Sphere > spheres_of( const TwoLevelSystem& t );

struct SystemVerdict
{
    bool ok = true;
    std::string failure; // first violated clause when !ok

    explicit operator bool() const noexcept { return ok; }
};

// Checks an explicit pair of sphere families (S, S_i) around `center`:
// nonempty center, total order, center is the minimum, S_i within S, inner
// spheres below outer spheres, and downward closure of S_i inside S.
SystemVerdict validate_family( const Proposition& center, std::span< const Proposition > all,
                               std::span< const Proposition > inner );

SystemVerdict validate_system( const TwoLevelSystem& t );

// Smallest sphere meeting `a`; nullopt if none does (including a = empty).
std::optional< Proposition > min_sphere( const SphereSystem& g, const Proposition& a );
std::optional< Sphere > min_sphere( const TwoLevelSystem& t, const Proposition& a );
std::optional< Sphere > min_sphere( const TwoLevelSystem& t, const Formula& a );

Proposition grove_revise( const SphereSystem& g, const Proposition& a );
Proposition grove_revise( const SphereSystem& g, const Formula& a );
Proposition grove_contract( const SphereSystem& g, const Proposition& a );
Proposition grove_contract( const SphereSystem& g, const Formula& a );

enum class RevisionCase
{
    accepted,          // S_a is inner: behave as revision
    contract_negation, // S_a is outer: withdraw ~a without accepting a
    unchanged,         // no sphere meets a
};

std::string_view to_string( RevisionCase c ) noexcept;

struct RevisionOutcome
{
    Proposition result;
    RevisionCase which;
};

RevisionOutcome two_level_outcome( const TwoLevelSystem& t, const Proposition& a );
Proposition two_level_revise( const TwoLevelSystem& t, const Proposition& a );
Proposition two_level_revise( const TwoLevelSystem& t, const Formula& a );

} // namespace srev
