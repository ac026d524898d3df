#pragma once

#include "srev/logic.hpp"
#include "srev/spheres.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace srev {

// A proposition over at most 32 worlds, as a bitmask (bit w = world w). Tables
// are indexed by these codes.
using PropCode = std::uint32_t;

// 2^(2^n) table entries: n = 4 is already 65536.
inline constexpr std::size_t max_table_atoms = 4;

/// A set of propositions over a fixed signature, i.e. a set of sentences
/// taken up to logical equivalence.
class PropositionSet
{
public:
    PropositionSet() = default;
    explicit PropositionSet( std::size_t world_count );

    static PropositionSet all( std::size_t world_count );

    [[nodiscard]] std::size_t world_count() const noexcept { return world_count_; }
    [[nodiscard]] bool contains( PropCode p ) const { return members_.at( p ); }
    void insert( PropCode p ) { members_.at( p ) = true; }
    void erase( PropCode p ) { members_.at( p ) = false; }
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] std::vector< PropCode > members() const;

    friend PropositionSet operator|( const PropositionSet& a, const PropositionSet& b );
    friend PropositionSet operator&( const PropositionSet& a, const PropositionSet& b );
    friend bool operator==( const PropositionSet&, const PropositionSet& ) = default;

private:
    std::size_t world_count_ = 0;
    std::vector< bool > members_;
};

struct CredibilityPair
{
    PropositionSet high; // C_H
    PropositionSet low;  // C_L

    [[nodiscard]] PropositionSet credible() const { return high | low; }
};

/// Belief change operator on a fixed K, stored as its action on every
/// proposition: table[code of ||a||] = code of ||K o a||.
class ExtensionalOperator
{
public:
    // Throws std::invalid_argument if the signature exceeds max_table_atoms,
    // the table is not total, or an entry is outside the universe.
    ExtensionalOperator( Signature sig, Proposition k, std::vector< PropCode > table );

    template < typename Fn >
    static ExtensionalOperator from_function( Signature sig, Proposition k, Fn&& fn )
    {
        const auto size = std::size_t{ 1 } << sig.world_count();
        std::vector< PropCode > table( size );
        for ( std::size_t p = 0; p < size; ++p )
            table[ p ] = fn( static_cast< PropCode >( p ) );
        return ExtensionalOperator( std::move( sig ), std::move( k ), std::move( table ) );
    }

    [[nodiscard]] const Signature& sig() const noexcept { return sig_; }
    [[nodiscard]] const Proposition& k() const noexcept { return k_; }
    [[nodiscard]] PropCode k_code() const noexcept { return k_code_; }
    [[nodiscard]] std::size_t world_count() const noexcept { return sig_.world_count(); }
    [[nodiscard]] PropCode universe_code() const noexcept { return universe_; }
    [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }

    [[nodiscard]] PropCode operator[]( PropCode p ) const { return table_[ p ]; }
    [[nodiscard]] Proposition apply( const Proposition& a ) const;
    [[nodiscard]] Proposition apply( const Formula& a ) const;
    [[nodiscard]] std::span< const PropCode > entries() const noexcept { return table_; }

    [[nodiscard]] Proposition proposition( PropCode p ) const { return Proposition::from_code( world_count(), p ); }
    [[nodiscard]] ExtensionalOperator with_entry( PropCode p, PropCode result ) const;

    friend bool operator==( const ExtensionalOperator&, const ExtensionalOperator& ) = default;

private:
    Signature sig_;
    Proposition k_;
    PropCode k_code_ = 0;
    PropCode universe_ = 0;
    std::vector< PropCode > table_;
};

ExtensionalOperator table_of( const TwoLevelSystem& t );
ExtensionalOperator revision_table( const SphereSystem& g );
ExtensionalOperator contraction_table( const SphereSystem& g );

// K o a = K * a on C_H, (K * a) meet K on C_L, K elsewhere.
ExtensionalOperator induce_two_level( const ExtensionalOperator& star, const CredibilityPair& c );

// Contraction from revision: K - a = (K * ~a) meet K.
ExtensionalOperator harper( const ExtensionalOperator& star );

// Revision from contraction: K * a = (K - ~a) + a.
ExtensionalOperator levi( const ExtensionalOperator& div );

struct Extraction
{
    ExtensionalOperator star;
    CredibilityPair credibility;
};

// Recovers (*, C_H, C_L) from a two-level operator: * keeps the accepted part
// of K o a when ~a was not forced, and falls back to Cn(a) otherwise.
Extraction extract_revision_and_credibility( const ExtensionalOperator& odot );

/// Raw candidate families collected from an operator, before ranking.
struct SphereFamilies
{
    std::vector< PropCode > all;   // S, increasing by size
    std::vector< PropCode > inner; // S_i, increasing by size
};

SphereFamilies collect_sphere_families( const ExtensionalOperator& odot );

struct ConstructionFailure
{
    std::string reason;
    std::optional< PropCode > sphere;
    std::optional< PropCode > proposition;
};

using ConstructionResult = std::variant< TwoLevelSystem, ConstructionFailure >;

// Builds a two-level system whose induced operator should be `odot`. Fails
// when the collected families do not form a valid two-level chain, which means
// `odot` did not satisfy the representation postulates.
ConstructionResult construct_spheres( const ExtensionalOperator& odot );

// Union of K o d over every d weaker than a. nullopt when K o a entails ~a.
std::optional< Proposition > s_alpha_union( const ExtensionalOperator& odot, const Proposition& a );
std::optional< Proposition > s_alpha_union( const ExtensionalOperator& odot, const Formula& a );

} // namespace srev
