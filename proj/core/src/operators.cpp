#include "srev/operators.hpp"

#include <algorithm>
#include <bit>

namespace srev {

namespace {

PropCode code_of( const Proposition& p ) { return static_cast< PropCode >( p.code() ); }

bool subset( PropCode a, PropCode b ) { return ( a & ~b ) == 0; }

} // namespace

// ---------------------------------------------------------------------------
// PropositionSet

PropositionSet::PropositionSet( std::size_t world_count )
    : world_count_{ world_count }, members_( std::size_t{ 1 } << world_count, false )
{
}

PropositionSet PropositionSet::all( std::size_t world_count )
{
    PropositionSet s( world_count );
    s.members_.flip();
    return s;
}

std::size_t PropositionSet::size() const noexcept
{
    return static_cast< std::size_t >( std::count( members_.begin(), members_.end(), true ) );
}

std::vector< PropCode > PropositionSet::members() const
{
    std::vector< PropCode > out;
    for ( std::size_t p = 0; p < members_.size(); ++p )
        if ( members_[ p ] )
            out.push_back( static_cast< PropCode >( p ) );
    return out;
}

PropositionSet operator|( const PropositionSet& a, const PropositionSet& b )
{
    if ( a.world_count_ != b.world_count_ )
        throw std::invalid_argument( "proposition sets over different universes" );
    PropositionSet out( a.world_count_ );
    for ( std::size_t p = 0; p < out.members_.size(); ++p )
        out.members_[ p ] = a.members_[ p ] || b.members_[ p ];
    return out;
}

PropositionSet operator&( const PropositionSet& a, const PropositionSet& b )
{
    if ( a.world_count_ != b.world_count_ )
        throw std::invalid_argument( "proposition sets over different universes" );
    PropositionSet out( a.world_count_ );
    for ( std::size_t p = 0; p < out.members_.size(); ++p )
        out.members_[ p ] = a.members_[ p ] && b.members_[ p ];
    return out;
}

// ---------------------------------------------------------------------------
// ExtensionalOperator

ExtensionalOperator::ExtensionalOperator( Signature sig, Proposition k, std::vector< PropCode > table )
    : sig_{ std::move( sig ) }, k_{ std::move( k ) }, table_{ std::move( table ) }
{
    if ( sig_.size() > max_table_atoms )
        throw std::invalid_argument( "operator tables support at most " + std::to_string( max_table_atoms )
                                     + " atoms" );
    if ( k_.world_count() != sig_.world_count() )
        throw std::invalid_argument( "K is not over the operator's signature" );
    const auto expected = std::size_t{ 1 } << sig_.world_count();
    if ( table_.size() != expected )
        throw std::invalid_argument( "table has " + std::to_string( table_.size() ) + " entries, expected "
                                     + std::to_string( expected ) );
    universe_ = static_cast< PropCode >( ( std::uint64_t{ 1 } << sig_.world_count() ) - 1 );
    k_code_ = code_of( k_ );
    for ( auto entry : table_ )
        if ( !subset( entry, universe_ ) )
            throw std::invalid_argument( "table entry outside the universe" );
}

Proposition ExtensionalOperator::apply( const Proposition& a ) const
{
    return proposition( table_.at( code_of( a ) ) );
}

Proposition ExtensionalOperator::apply( const Formula& a ) const { return apply( models( a, sig_ ) ); }

ExtensionalOperator ExtensionalOperator::with_entry( PropCode p, PropCode result ) const
{
    auto table = table_;
    table.at( p ) = result;
    return ExtensionalOperator( sig_, k_, std::move( table ) );
}

// ---------------------------------------------------------------------------
// Tables from sphere systems

ExtensionalOperator table_of( const TwoLevelSystem& t )
{
    const auto n = t.sig().world_count();
    return ExtensionalOperator::from_function( t.sig(), t.center(), [ & ]( PropCode p ) {
        return code_of( two_level_revise( t, Proposition::from_code( n, p ) ) );
    } );
}

ExtensionalOperator revision_table( const SphereSystem& g )
{
    const auto n = g.sig().world_count();
    return ExtensionalOperator::from_function( g.sig(), g.center(), [ & ]( PropCode p ) {
        return code_of( grove_revise( g, Proposition::from_code( n, p ) ) );
    } );
}

ExtensionalOperator contraction_table( const SphereSystem& g )
{
    const auto n = g.sig().world_count();
    return ExtensionalOperator::from_function( g.sig(), g.center(), [ & ]( PropCode p ) {
        return code_of( grove_contract( g, Proposition::from_code( n, p ) ) );
    } );
}

// ---------------------------------------------------------------------------
// Induction and the Levi/Harper interchange

ExtensionalOperator induce_two_level( const ExtensionalOperator& star, const CredibilityPair& c )
{
    const auto k = star.k_code();
    return ExtensionalOperator::from_function( star.sig(), star.k(), [ & ]( PropCode p ) -> PropCode {
        if ( c.high.contains( p ) )
            return star[ p ];
        if ( c.low.contains( p ) )
            return star[ p ] | k; // meet of theories = union of model sets
        return k;
    } );
}

ExtensionalOperator harper( const ExtensionalOperator& star )
{
    const auto u = star.universe_code();
    const auto k = star.k_code();
    return ExtensionalOperator::from_function( star.sig(), star.k(),
                                               [ & ]( PropCode p ) { return star[ u & ~p ] | k; } );
}

ExtensionalOperator levi( const ExtensionalOperator& div )
{
    const auto u = div.universe_code();
    return ExtensionalOperator::from_function( div.sig(), div.k(),
                                               [ & ]( PropCode p ) { return div[ u & ~p ] & p; } );
}

Extraction extract_revision_and_credibility( const ExtensionalOperator& odot )
{
    const auto n = odot.world_count();
    PropositionSet high( n );
    PropositionSet low( n );
    auto star = ExtensionalOperator::from_function( odot.sig(), odot.k(), [ & ]( PropCode p ) -> PropCode {
        const auto r = odot[ p ];
        if ( subset( r, p ) )
            high.insert( p );
        else if ( ( r & p ) != 0 )
            low.insert( p );
        // ~a not in K o a  iff  K o a has an a-world
        return ( r & p ) != 0 ? ( r & p ) : p;
    } );
    return { std::move( star ), { std::move( high ), std::move( low ) } };
}

// ---------------------------------------------------------------------------
// Sphere construction

SphereFamilies collect_sphere_families( const ExtensionalOperator& odot )
{
    const auto size = static_cast< PropCode >( odot.size() );
    const auto k = odot.k_code();

    PropCode accepted_worlds = 0;  // worlds of some K o a with K o a |- a
    PropCode credible_worlds = 0;  // worlds of some K o a consistent with a
    for ( PropCode p = 0; p < size; ++p ) {
        if ( subset( odot[ p ], p ) )
            accepted_worlds |= odot[ p ];
        if ( ( odot[ p ] & p ) != 0 )
            credible_worlds |= odot[ p ];
    }

    // Every a whose worlds meet S has K o a within S.
    auto closed = [ & ]( PropCode s ) {
        for ( PropCode p = 0; p < size; ++p )
            if ( ( s & p ) != 0 && !subset( odot[ p ], s ) )
                return false;
        return true;
    };
    // Every a missing S leaves exactly the K-worlds inside S.
    auto outer_band = [ & ]( PropCode s ) {
        for ( PropCode p = 0; p < size; ++p )
            if ( ( s & p ) == 0 && ( odot[ p ] & s ) != k )
                return false;
        return true;
    };

    SphereFamilies out;
    for ( PropCode s = 1; s < size; ++s ) {
        const bool is_closed = closed( s );
        const bool inner = s == k || ( subset( s, accepted_worlds ) && is_closed );
        const bool any = s == k || ( subset( s, credible_worlds ) && is_closed && ( inner || outer_band( s ) ) );
        if ( inner )
            out.inner.push_back( s );
        if ( any )
            out.all.push_back( s );
    }
    auto by_size = []( PropCode a, PropCode b ) {
        auto ca = std::popcount( a );
        auto cb = std::popcount( b );
        return ca != cb ? ca < cb : a < b;
    };
    std::sort( out.all.begin(), out.all.end(), by_size );
    std::sort( out.inner.begin(), out.inner.end(), by_size );
    return out;
}

ConstructionResult construct_spheres( const ExtensionalOperator& odot )
{
    const auto n = odot.world_count();
    if ( odot.k_code() == 0 )
        return ConstructionFailure{ "K is inconsistent", std::nullopt, std::nullopt };

    auto families = collect_sphere_families( odot );

    std::vector< Proposition > all;
    std::vector< Proposition > inner;
    for ( auto s : families.all )
        all.push_back( odot.proposition( s ) );
    for ( auto s : families.inner )
        inner.push_back( odot.proposition( s ) );
    if ( auto verdict = validate_family( odot.k(), all, inner ); !verdict )
        return ConstructionFailure{ "collected families are not a two-level system: " + verdict.failure,
                                    std::nullopt, std::nullopt };

    // A chain: the sphere at position i gets rank i, inner spheres come first.
    for ( std::size_t i = 0; i < families.inner.size(); ++i )
        if ( families.all[ i ] != families.inner[ i ] )
            return ConstructionFailure{ "inner spheres are not the innermost", families.all[ i ], std::nullopt };

    std::vector< Rank > ranks( n );
    for ( World w = 0; w < n; ++w ) {
        for ( std::size_t i = 0; i < families.all.size(); ++i ) {
            if ( ( families.all[ i ] >> w ) & 1u ) {
                ranks[ w ] = static_cast< std::uint32_t >( i );
                break;
            }
        }
    }
    return TwoLevelSystem( odot.sig(), std::move( ranks ), static_cast< std::uint32_t >( families.inner.size() - 1 ) );
}

std::optional< Proposition > s_alpha_union( const ExtensionalOperator& odot, const Proposition& a )
{
    const auto p = code_of( a );
    if ( ( odot[ p ] & p ) == 0 )
        return std::nullopt;
    PropCode out = 0;
    for ( PropCode q = 0; q < odot.size(); ++q )
        if ( subset( p, q ) )
            out |= odot[ q ];
    return odot.proposition( out );
}

std::optional< Proposition > s_alpha_union( const ExtensionalOperator& odot, const Formula& a )
{
    return s_alpha_union( odot, models( a, odot.sig() ) );
}

} // namespace srev
