#include "srev/spheres.hpp"

#include <algorithm>
#include <set>

namespace srev {

namespace {

// Lowest finite rank among the worlds of `a`.
template < typename RankOf >
std::optional< std::uint32_t > lowest_rank( const Proposition& a, RankOf rank_of )
{
    std::optional< std::uint32_t > best;
    for ( World w : a.worlds() ) {
        auto r = rank_of( w );
        if ( r && ( !best || *r < *best ) )
            best = *r;
    }
    return best;
}

template < typename RankOf >
Proposition level_set( std::size_t world_count, std::uint32_t v, RankOf rank_of )
{
    Proposition s( world_count );
    for ( World w = 0; w < world_count; ++w ) {
        auto r = rank_of( w );
        if ( r && *r <= v )
            s.insert( w );
    }
    return s;
}

bool nested( const Proposition& a, const Proposition& b ) { return a.subset_of( b ) || b.subset_of( a ); }

bool member( std::span< const Proposition > family, const Proposition& x )
{
    return std::find( family.begin(), family.end(), x ) != family.end();
}

} // namespace

// ---------------------------------------------------------------------------
// SphereSystem

SphereSystem::SphereSystem( Signature sig, std::vector< std::uint32_t > ranks )
    : sig_{ std::move( sig ) }, ranks_{ std::move( ranks ) }
{
    if ( ranks_.size() != sig_.world_count() )
        throw SystemError( "rank vector has " + std::to_string( ranks_.size() ) + " entries for "
                           + std::to_string( sig_.world_count() ) + " worlds" );
    if ( std::find( ranks_.begin(), ranks_.end(), 0u ) == ranks_.end() )
        throw SystemError( "empty center: no world has rank 0" );
}

Proposition SphereSystem::center() const
{
    Proposition c( sig_.world_count() );
    for ( World w = 0; w < ranks_.size(); ++w )
        if ( ranks_[ w ] == 0 )
            c.insert( w );
    return c;
}

std::uint32_t SphereSystem::max_rank() const { return *std::max_element( ranks_.begin(), ranks_.end() ); }

TwoLevelSystem SphereSystem::as_two_level() const
{
    return TwoLevelSystem( sig_, std::vector< Rank >( ranks_.begin(), ranks_.end() ), max_rank() );
}

// ---------------------------------------------------------------------------
// TwoLevelSystem

TwoLevelSystem::TwoLevelSystem( Signature sig, std::vector< Rank > ranks, std::uint32_t cutoff )
    : sig_{ std::move( sig ) }, ranks_{ std::move( ranks ) }, cutoff_{ cutoff }
{
    if ( ranks_.size() != sig_.world_count() )
        throw SystemError( "rank vector has " + std::to_string( ranks_.size() ) + " entries for "
                           + std::to_string( sig_.world_count() ) + " worlds" );
}

Proposition TwoLevelSystem::center() const
{
    Proposition c( sig_.world_count() );
    for ( World w = 0; w < ranks_.size(); ++w )
        if ( ranks_[ w ] == 0u )
            c.insert( w );
    return c;
}

Proposition TwoLevelSystem::plausible() const
{
    Proposition p( sig_.world_count() );
    for ( World w = 0; w < ranks_.size(); ++w )
        if ( ranks_[ w ] )
            p.insert( w );
    return p;
}

// ---------------------------------------------------------------------------
// Sphere families

std::vector< Proposition > spheres_of( const SphereSystem& g )
{
    std::set< std::uint32_t > levels( g.ranks().begin(), g.ranks().end() );
    std::vector< Proposition > out;
    for ( auto v : levels )
        out.push_back( level_set( g.sig().world_count(), v, [ & ]( World w ) { return Rank{ g.rank( w ) }; } ) );
    return out;
}

std::vector< Sphere > spheres_of( const TwoLevelSystem& t )
{
    std::set< std::uint32_t > levels;
    for ( const auto& r : t.ranks() )
        if ( r )
            levels.insert( *r );
    std::vector< Sphere > out;
    for ( auto v : levels )
        out.push_back(
            { level_set( t.sig().world_count(), v, [ & ]( World w ) { return t.rank( w ); } ), v <= t.cutoff() } );
    return out;
}

SystemVerdict validate_family( const Proposition& center, std::span< const Proposition > all,
                               std::span< const Proposition > inner )
{
    auto fail = []( std::string why ) { return SystemVerdict{ false, std::move( why ) }; };

    if ( center.empty() )
        return fail( "empty center" );
    if ( !member( all, center ) )
        return fail( "center is not a sphere of S" );
    if ( !member( inner, center ) )
        return fail( "center is not a sphere of S_i" );

    for ( const auto* family : { &all, &inner } ) {
        const char* name = family == &all ? "S" : "S_i";
        for ( const auto& x : *family ) {
            if ( !center.subset_of( x ) )
                return fail( std::string( "sphere " ) + x.to_hex() + " of " + name + " does not contain the center" );
            for ( const auto& y : *family )
                if ( !nested( x, y ) )
                    return fail( std::string( name ) + " is not totally ordered: " + x.to_hex() + " vs " + y.to_hex() );
        }
    }

    for ( const auto& x : inner )
        if ( !member( all, x ) )
            return fail( "inner sphere " + x.to_hex() + " is not a sphere of S" );

    for ( const auto& x : inner )
        for ( const auto& y : all )
            if ( !member( inner, y ) && !x.subset_of( y ) )
                return fail( "inner sphere " + x.to_hex() + " is not inside outer sphere " + y.to_hex() );

    for ( const auto& x : all )
        for ( const auto& y : inner )
            if ( x.subset_of( y ) && !member( inner, x ) )
                return fail( "sphere " + x.to_hex() + " lies inside inner sphere " + y.to_hex() + " but is not inner" );

    return {};
}

SystemVerdict validate_system( const TwoLevelSystem& t )
{
    auto center = t.center();
    if ( center.empty() )
        return { false, "empty center" };

    std::vector< Proposition > all;
    std::vector< Proposition > inner;
    for ( auto& s : spheres_of( t ) ) {
        if ( s.inner )
            inner.push_back( s.worlds );
        all.push_back( std::move( s.worlds ) );
    }
    for ( std::size_t i = 1; i < all.size(); ++i )
        if ( all[ i ] == all[ i - 1 ] || !all[ i - 1 ].subset_of( all[ i ] ) )
            return { false, "sphere chain is not strictly increasing" };
    return validate_family( center, all, inner );
}

// ---------------------------------------------------------------------------
// Operators

std::optional< Proposition > min_sphere( const SphereSystem& g, const Proposition& a )
{
    auto v = lowest_rank( a, [ & ]( World w ) { return Rank{ g.rank( w ) }; } );
    if ( !v )
        return std::nullopt;
    return level_set( g.sig().world_count(), *v, [ & ]( World w ) { return Rank{ g.rank( w ) }; } );
}

std::optional< Sphere > min_sphere( const TwoLevelSystem& t, const Proposition& a )
{
    auto v = lowest_rank( a, [ & ]( World w ) { return t.rank( w ); } );
    if ( !v )
        return std::nullopt;
    return Sphere{ level_set( t.sig().world_count(), *v, [ & ]( World w ) { return t.rank( w ); } ), *v <= t.cutoff() };
}

std::optional< Sphere > min_sphere( const TwoLevelSystem& t, const Formula& a )
{
    return min_sphere( t, models( a, t.sig() ) );
}

Proposition grove_revise( const SphereSystem& g, const Proposition& a )
{
    auto s = min_sphere( g, a );
    if ( !s )
        return Proposition( g.sig().world_count() ); // a inconsistent: revise into L
    return *s & a;
}

Proposition grove_revise( const SphereSystem& g, const Formula& a ) { return grove_revise( g, models( a, g.sig() ) ); }

Proposition grove_contract( const SphereSystem& g, const Proposition& a )
{
    auto not_a = a.complement();
    auto s = min_sphere( g, not_a );
    if ( !s )
        return g.center();
    return ( *s & not_a ) | g.center();
}

Proposition grove_contract( const SphereSystem& g, const Formula& a )
{
    return grove_contract( g, models( a, g.sig() ) );
}

std::string_view to_string( RevisionCase c ) noexcept
{
    switch ( c ) {
    case RevisionCase::accepted:
        return "accepted";
    case RevisionCase::contract_negation:
        return "contract-negation";
    case RevisionCase::unchanged:
        return "unchanged";
    }
    return "?";
}

RevisionOutcome two_level_outcome( const TwoLevelSystem& t, const Proposition& a )
{
    auto s = min_sphere( t, a );
    if ( !s )
        return { t.center(), RevisionCase::unchanged };
    if ( s->inner )
        return { s->worlds & a, RevisionCase::accepted };
    return { t.center() | ( s->worlds & a ), RevisionCase::contract_negation };
}

Proposition two_level_revise( const TwoLevelSystem& t, const Proposition& a )
{
    return two_level_outcome( t, a ).result;
}

Proposition two_level_revise( const TwoLevelSystem& t, const Formula& a )
{
    return two_level_revise( t, models( a, t.sig() ) );
}

} // namespace srev
