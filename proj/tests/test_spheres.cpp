#include "support.hpp"

#include <doctest.h>

using namespace srev;
using testing::pq;
using testing::prop;
using testing::sys_a;
using testing::sys_b;

namespace {

Proposition m( std::string_view text ) { return models( parse_formula( text, pq() ), pq() ); }

std::vector< Proposition > all_propositions( std::size_t world_count )
{
    std::vector< Proposition > out;
    for ( std::uint64_t c = 0; c < ( std::uint64_t{ 1 } << world_count ); ++c )
        out.push_back( Proposition::from_code( world_count, c ) );
    return out;
}

} // namespace

TEST_CASE( "sphere chains" )
{
    auto a = spheres_of( sys_a() );
    REQUIRE( a.size() == 3 );
    CHECK( a[ 0 ] == Sphere{ prop( { 3 } ), true } );
    CHECK( a[ 1 ] == Sphere{ prop( { 2, 3 } ), true } );
    CHECK( a[ 2 ] == Sphere{ prop( { 1, 2, 3 } ), false } );

    auto b = spheres_of( sys_b() );
    CHECK( b == std::vector< Proposition >{ prop( { 3 } ), prop( { 2, 3 } ), prop( { 1, 2, 3 } ), prop( { 0, 1, 2, 3 } ) } );

    auto flat = spheres_of( SphereSystem( pq(), { 0, 0, 0, 0 } ) );
    CHECK( flat == std::vector< Proposition >{ Proposition::universe( 4 ) } );

    // Rank gaps are inert.
    CHECK( spheres_of( SphereSystem( pq(), { 7, 5, 5, 0 } ) ).size() == 3 );
}

TEST_CASE( "system construction errors" )
{
    CHECK_THROWS_AS( SphereSystem( pq(), { 1, 1, 1, 1 } ), SystemError );
    CHECK_THROWS_AS( SphereSystem( pq(), { 0, 1 } ), SystemError );
    CHECK_THROWS_AS( TwoLevelSystem( pq(), { 0u }, 0 ), SystemError );
}

TEST_CASE( "validate_system" )
{
    CHECK( validate_system( sys_a() ).ok );

    auto no_center = validate_system( TwoLevelSystem( pq(), { std::nullopt, 2u, 1u, 1u }, 1 ) );
    CHECK_FALSE( no_center.ok );
    CHECK( no_center.failure == "empty center" );

    CHECK( validate_system( TwoLevelSystem( pq(), { std::nullopt, 2u, 1u, 0u }, 0 ) ).ok );
    CHECK( validate_system( TwoLevelSystem( pq(), { 0u, 0u, 0u, 0u }, 0 ) ).ok );
    CHECK( validate_system( sys_b().as_two_level() ).ok );
}

TEST_CASE( "validate_family catches each clause" )
{
    auto k = prop( { 3 } );
    std::vector< Proposition > all = { prop( { 3 } ), prop( { 2, 3 } ), prop( { 1, 2, 3 } ) };
    std::vector< Proposition > inner = { prop( { 3 } ), prop( { 2, 3 } ) };
    CHECK( validate_family( k, all, inner ).ok );

    CHECK_FALSE( validate_family( prop( {} ), all, inner ).ok );
    // Not a chain.
    std::vector< Proposition > forked = { prop( { 3 } ), prop( { 2, 3 } ), prop( { 1, 3 } ) };
    CHECK_FALSE( validate_family( k, forked, inner ).ok );
    // Center missing from S_i.
    std::vector< Proposition > no_k = { prop( { 2, 3 } ) };
    CHECK_FALSE( validate_family( k, all, no_k ).ok );
    // An inner sphere outside S.
    std::vector< Proposition > stray = { prop( { 3 } ), prop( { 0, 3 } ) };
    CHECK_FALSE( validate_family( k, all, stray ).ok );
    // An outer sphere below an inner one.
    std::vector< Proposition > gap = { prop( { 3 } ), prop( { 1, 2, 3 } ) };
    CHECK_FALSE( validate_family( k, all, gap ).ok );
}

TEST_CASE( "min_sphere" )
{
    auto t = sys_a();
    auto s = min_sphere( t, parse_formula( "~q", pq() ) );
    REQUIRE( s );
    CHECK( s->worlds == prop( { 2, 3 } ) );
    CHECK( s->inner );
    CHECK_FALSE( min_sphere( t, parse_formula( "~p&~q", pq() ) ) );
    CHECK( min_sphere( t, Formula::top() )->worlds == prop( { 3 } ) );
    CHECK_FALSE( min_sphere( t, Formula::bottom() ) );
    CHECK_FALSE( min_sphere( sys_b(), prop( {} ) ) );
}

TEST_CASE( "grove revision and contraction on SYS-B" )
{
    auto g = sys_b();
    CHECK( grove_revise( g, parse_formula( "~p", pq() ) ) == prop( { 1 } ) );
    CHECK( grove_revise( g, Formula::bottom() ).empty() );
    CHECK( grove_revise( g, Formula::top() ) == prop( { 3 } ) );

    CHECK( grove_contract( g, parse_formula( "p", pq() ) ) == prop( { 1, 3 } ) );
    CHECK( grove_contract( g, Formula::top() ) == prop( { 3 } ) );
    CHECK( grove_contract( g, Formula::bottom() ) == prop( { 3 } ) );
}

TEST_CASE( "two-level revision on SYS-A" )
{
    auto t = sys_a();
    auto run = [ & ]( std::string_view text ) { return two_level_outcome( t, m( text ) ); };

    auto nq = run( "~q" );
    CHECK( nq.result == prop( { 2 } ) );
    CHECK( nq.which == RevisionCase::accepted );

    auto np = run( "~p" );
    CHECK( np.result == prop( { 1, 3 } ) );
    CHECK( np.which == RevisionCase::contract_negation );

    auto none = run( "~p & ~q" );
    CHECK( none.result == prop( { 3 } ) );
    CHECK( none.which == RevisionCase::unchanged );

    auto q = run( "q" );
    CHECK( q.result == prop( { 3 } ) );
    CHECK( q.which == RevisionCase::accepted );

    CHECK( two_level_revise( t, Formula::bottom() ) == prop( { 3 } ) );
    CHECK( to_string( RevisionCase::contract_negation ) == "contract-negation" );
}

TEST_CASE( "two-level revision matches the sphere-family oracle on every n=2 system" )
{
    EnumerationSpec spec{ pq(), std::nullopt, EnumerationMode::exhaustive };
    auto systems = enumerate_systems( spec );
    REQUIRE( systems.size() == 391 );
    for ( const auto& t : systems ) {
        auto spheres = oracle::from_ranks( testing::oracle_ranks( t ), static_cast< int >( t.cutoff() ) );
        for ( const auto& a : all_propositions( 4 ) ) {
            auto got = two_level_outcome( t, a );
            auto want = oracle::revise( spheres, testing::worlds_of( a ) );
            REQUIRE( testing::worlds_of( got.result ) == want.worlds );
            REQUIRE( static_cast< int >( got.which ) == static_cast< int >( want.which ) );
            // Per-case shape.
            if ( got.which == RevisionCase::accepted )
                CHECK( got.result.subset_of( a ) );
            if ( got.which == RevisionCase::contract_negation )
                CHECK( t.center().subset_of( got.result ) );
            if ( got.which == RevisionCase::unchanged )
                CHECK( got.result == t.center() );
        }
    }
}

TEST_CASE( "grove properties over every full n<=2 system" )
{
    for ( auto sig : { Signature( { "p" } ), pq() } ) {
        EnumerationSpec spec{ sig, std::nullopt, EnumerationMode::exhaustive };
        for ( const auto& g : enumerate_grove_systems( spec ) ) {
            auto k = g.center();
            auto one_level = g.as_two_level();
            for ( const auto& a : all_propositions( sig.world_count() ) ) {
                if ( k.intersects( a ) )
                    CHECK( grove_revise( g, a ) == ( k & a ) );
                CHECK( k.subset_of( grove_contract( g, a ) ) );
                if ( !a.empty() )
                    CHECK( two_level_revise( one_level, a ) == grove_revise( g, a ) );
                // Contract-negation answers are Harper contractions by the negation.
                if ( two_level_outcome( one_level, a ).which == RevisionCase::accepted && !a.empty() )
                    CHECK( ( grove_revise( g, a ) | k ) == grove_contract( g, a.complement() ) );
            }
        }
    }
}

TEST_CASE( "outer answers equal contraction by the negation over the completed system" )
{
    // SYS-A completed: world 0 ranked last.
    auto t = sys_a();
    SphereSystem completed( pq(), { 3, 2, 1, 0 } );
    for ( const auto& a : all_propositions( 4 ) ) {
        auto out = two_level_outcome( t, a );
        if ( out.which == RevisionCase::contract_negation )
            CHECK( out.result == grove_contract( completed, a.complement() ) );
    }
}
