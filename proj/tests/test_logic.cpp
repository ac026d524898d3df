#include "random_formula.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace srev;
using testing::pq;
using testing::prop;

TEST_CASE( "signature validation" )
{
    CHECK_THROWS_AS( Signature( {} ), SignatureError );
    CHECK_THROWS_AS( Signature( { "p", "p" } ), SignatureError );
    CHECK_THROWS_AS( Signature( { "true" } ), SignatureError );
    CHECK_THROWS_AS( Signature( { "2p" } ), SignatureError );
    CHECK_THROWS_AS( Signature( std::vector< std::string >( 17, "a" ) ), SignatureError );
    std::vector< std::string > sixteen;
    for ( int i = 0; i < 16; ++i )
        sixteen.push_back( "a" + std::to_string( i ) );
    CHECK( Signature( sixteen ).size() == 16 );

    auto sig = pq();
    CHECK( sig.index_of( "q" ) == 1u );
    CHECK_FALSE( sig.index_of( "r" ) );
    CHECK( sig.world_count() == 4 );
}

TEST_CASE( "world numbering puts the first atom in the high bit" )
{
    auto sig = pq();
    CHECK( sig.world_label( 3 ) == "11" );
    CHECK( sig.world_label( 2 ) == "10" );
    CHECK( sig.world_label( 1 ) == "01" );
    CHECK( sig.holds( 2, 0 ) );
    CHECK_FALSE( sig.holds( 2, 1 ) );
    CHECK( sig.parse_world_label( "01" ) == World{ 1 } );
    CHECK_FALSE( sig.parse_world_label( "1" ) );
    CHECK_FALSE( sig.parse_world_label( "1x" ) );
    for ( World w = 0; w < 4; ++w )
        CHECK( oracle::world_of( oracle::valuation_of( static_cast< int >( w ), 2 ) ) == static_cast< int >( w ) );
}

TEST_CASE( "proposition set algebra" )
{
    auto a = prop( { 0, 2 } );
    auto b = prop( { 2, 3 } );
    CHECK( ( a & b ) == prop( { 2 } ) );
    CHECK( ( a | b ) == prop( { 0, 2, 3 } ) );
    CHECK( ( a - b ) == prop( { 0 } ) );
    CHECK( a.complement() == prop( { 1, 3 } ) );
    CHECK( prop( { 2 } ).subset_of( a ) );
    CHECK_FALSE( a.subset_of( b ) );
    CHECK( a.intersects( b ) );
    CHECK( a.code() == 0x5 );
    CHECK( a.to_hex() == "0x5" );
    CHECK( Proposition( 4 ).to_hex() == "0x0" );
    CHECK( Proposition::universe( 4 ).full() );
    CHECK( Proposition::from_hex( 4, "0xa" ) == prop( { 1, 3 } ) );
    CHECK( Proposition::from_hex( 4, "A" ) == prop( { 1, 3 } ) );
    CHECK_THROWS_AS( Proposition::from_hex( 4, "0x10" ), std::invalid_argument );
    CHECK_THROWS_AS( Proposition::from_hex( 4, "0xg" ), std::invalid_argument );

    // Wide universes span several words.
    auto wide = Proposition::from_worlds( 256, { 0, 63, 64, 255 } );
    CHECK( wide.count() == 4 );
    CHECK( wide.complement().count() == 252 );
    CHECK( wide.worlds() == std::vector< World >{ 0, 63, 64, 255 } );
}

TEST_CASE( "models on the reference signature" )
{
    auto sig = pq();
    CHECK( models( parse_formula( "true", sig ), sig ) == prop( { 0, 1, 2, 3 } ) );
    CHECK( models( parse_formula( "p & q", sig ), sig ) == prop( { 3 } ) );
    CHECK( models( parse_formula( "~p", sig ), sig ) == prop( { 0, 1 } ) );
    CHECK( models( parse_formula( "false", sig ), sig ).empty() );
}

TEST_CASE( "theory_entails" )
{
    auto sig = pq();
    CHECK( theory_entails( prop( { 3 } ), parse_formula( "q", sig ), sig ) );
    CHECK( theory_entails( prop( {} ), parse_formula( "false", sig ), sig ) );
    CHECK_FALSE( theory_entails( prop( { 1, 3 } ), parse_formula( "p", sig ), sig ) );
}

TEST_CASE( "expand" )
{
    auto sig = pq();
    CHECK( expand( prop( { 2, 3 } ), parse_formula( "q", sig ), sig ) == prop( { 3 } ) );
    CHECK( expand( prop( { 3 } ), parse_formula( "~p", sig ), sig ).empty() );
    CHECK( expand( prop( { 0, 1, 2, 3 } ), parse_formula( "p | q", sig ), sig ) == prop( { 1, 2, 3 } ) );
}

TEST_CASE( "expand laws over every K and formula variant" )
{
    auto sig = pq();
    testing::FormulaGenerator gen( { "p", "q" }, 11 );
    for ( std::uint64_t k = 0; k < 16; ++k ) {
        auto kp = Proposition::from_code( 4, k );
        CHECK( expand( kp, Formula::top(), sig ) == kp );
        for ( int i = 0; i < 20; ++i ) {
            auto f = parse_formula( gen.next( 3 ).text, sig );
            auto e = expand( kp, f, sig );
            CHECK( e.subset_of( kp ) );
            CHECK( ( e == kp ) == theory_entails( kp, f, sig ) );
        }
    }
}

TEST_CASE( "canonical formula" )
{
    auto sig = pq();
    CHECK( to_string( canonical_formula( prop( { 3 } ), sig ), sig ) == "p&q" );
    CHECK( to_string( canonical_formula( prop( {} ), sig ), sig ) == "false" );
    CHECK( to_string( canonical_formula( prop( { 0, 1, 2, 3 } ), sig ), sig ) == "true" );
    CHECK( to_string( canonical_formula( prop( { 1, 3 } ), sig ), sig ) == "(~p&q)|(p&q)" );
    CHECK( models( canonical_formula( prop( { 1, 3 } ), sig ), sig ) == models( parse_formula( "q", sig ), sig ) );
}

TEST_CASE( "canonical formula round trip for every proposition up to three atoms" )
{
    for ( std::size_t n = 1; n <= 3; ++n ) {
        std::vector< std::string > atoms = { "p", "q", "r" };
        atoms.resize( n );
        Signature sig( atoms );
        const std::uint64_t size = std::uint64_t{ 1 } << sig.world_count();
        for ( std::uint64_t c = 0; c < size; ++c ) {
            auto p = Proposition::from_code( sig.world_count(), c );
            auto f = canonical_formula( p, sig );
            REQUIRE( models( f, sig ) == p );
            REQUIRE( models( parse_formula( to_string( f, sig ), sig ), sig ) == p );
        }
    }
}

TEST_CASE( "world list" )
{
    auto sig = pq();
    CHECK( world_list( prop( { 1, 3 } ), sig ) == "{01,11}" );
    CHECK( world_list( prop( {} ), sig ) == "{}" );
    CHECK( world_list( prop( { 1, 3 } ), sig ) == oracle::world_list( { 1, 3 }, 2 ) );
}

TEST_CASE( "models agrees with a truth-table oracle on random formulas" )
{
    for ( std::size_t n = 1; n <= 4; ++n ) {
        std::vector< std::string > atoms = { "p", "q", "r", "s" };
        atoms.resize( n );
        Signature sig( atoms );
        testing::FormulaGenerator gen( atoms, 1000 + n );
        for ( int i = 0; i < 300; ++i ) {
            auto rf = gen.next( 5 );
            auto got = testing::worlds_of( models( parse_formula( rf.text, sig ), sig ) );
            REQUIRE_MESSAGE( got == oracle::models( rf.eval, static_cast< int >( n ) ), rf.text );
        }
    }
}

TEST_CASE( "classical equivalences hold on random pairs" )
{
    auto sig = Signature( { "p", "q", "r" } );
    testing::FormulaGenerator gen( { "p", "q", "r" }, 77 );
    for ( int i = 0; i < 200; ++i ) {
        auto a = parse_formula( gen.next( 3 ).text, sig );
        auto b = parse_formula( gen.next( 3 ).text, sig );
        auto m = [ & ]( const Formula& f ) { return models( f, sig ); };
        CHECK( m( negation( conjunction( a, b ) ) ) == m( disjunction( negation( a ), negation( b ) ) ) );
        CHECK( m( negation( disjunction( a, b ) ) ) == m( conjunction( negation( a ), negation( b ) ) ) );
        CHECK( m( implication( a, b ) ) == m( disjunction( negation( a ), b ) ) );
        CHECK( m( equivalence( a, b ) ) == m( conjunction( implication( a, b ), implication( b, a ) ) ) );
        CHECK( m( negation( negation( a ) ) ) == m( a ) );
        CHECK( m( a ).complement() == m( negation( a ) ) );
    }
}

TEST_CASE( "models rejects atoms outside the signature" )
{
    auto f = parse_formula( "r", Signature( { "p", "q", "r" } ) );
    CHECK_THROWS_AS( models( f, pq() ), SignatureError );
}
