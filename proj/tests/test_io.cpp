#include "support.hpp"

#include <doctest.h>

using namespace srev;
using testing::prop;
using testing::sys_a;
using testing::sys_b;

TEST_CASE( "system files" )
{
    auto file = io::read_system_file( testing::data_path( "sysA.json" ) );
    CHECK( file.cutoff == 1u );
    CHECK( file.has_implausible() );
    CHECK( file.two_level() == sys_a() );
    CHECK_THROWS_AS( (void)file.full(), io::FormatError );
    CHECK( io::write_system( sys_a() ) == R"({"atoms":["p","q"],"ranks":{"11":0,"10":1,"01":2,"00":null},"cutoff":1})" );

    auto b = io::read_system_file( testing::data_path( "sysB.json" ) );
    CHECK_FALSE( b.cutoff );
    CHECK( b.full() == sys_b() );
    CHECK( b.two_level() == sys_b().as_two_level() );
    CHECK( io::parse_system( io::write_system( sys_b() ) ).full() == sys_b() );
}

TEST_CASE( "system files round trip" )
{
    EnumerationSpec spec{ testing::pq(), std::nullopt, EnumerationMode::exhaustive };
    for ( const auto& t : enumerate_systems( spec ) )
        REQUIRE( io::parse_system( io::write_system( t ) ).two_level() == t );
}

TEST_CASE( "system file errors" )
{
    auto bad = []( std::string_view text ) {
        CHECK_THROWS_AS( io::parse_system( text ), io::FormatError );
    };
    bad( "not json" );
    bad( "[]" );
    bad( R"({"ranks":{}})" );
    bad( R"({"atoms":["p"],"ranks":{"1":0},"extra":1})" );
    bad( R"({"atoms":["p"],"ranks":{"10":0}})" );
    bad( R"({"atoms":["p"],"ranks":{"1":-1}})" );
    bad( R"({"atoms":["p"],"ranks":{"1":0,"0":null}})" );
    bad( R"({"atoms":["p"],"ranks":{"1":0}})" ); // missing world without a cutoff
    bad( R"({"atoms":["p","p"],"ranks":{}})" );
    bad( R"({"atoms":["p"],"ranks":{"1":0},"cutoff":"1"})" );
    bad( R"({"atoms":["p"],"ranks":{"1":2,"0":1}})" ); // no rank 0

    auto missing = io::parse_system( R"({"atoms":["p"],"ranks":{"1":0},"cutoff":0})" );
    CHECK_FALSE( missing.ranks[ 0 ] );
    CHECK( missing.ranks[ 1 ] == 0u );
}

TEST_CASE( "table files" )
{
    auto m1 = io::read_table_file( testing::data_path( "mutant1.json" ) );
    CHECK( m1 == table_of( sys_a() ).with_entry( 0x1, 0x5 ) );
    CHECK( io::parse_table( io::write_table( m1 ) ) == m1 );

    // K as a formula, keys without the prefix.
    std::string text = R"({"atoms":["p"],"K":"p","entries":{"0":"2","1":"1","2":"2","3":"2"}})";
    auto t = io::parse_table( text );
    CHECK( t.k() == Proposition::from_worlds( 2, { 1 } ) );
    CHECK( t[ 1 ] == 1 );
}

TEST_CASE( "table file errors" )
{
    auto bad = []( std::string_view text ) {
        CHECK_THROWS_AS( io::parse_table( text ), io::FormatError );
    };
    bad( R"({"atoms":["p"],"K":"0x2","entries":{"0x0":"0x2","0x1":"0x1","0x2":"0x2"}})" );
    bad( R"({"atoms":["p"],"K":"0x2","entries":{"0x0":"0x2","0":"0x2","0x1":"0x1","0x2":"0x2","0x3":"0x2"}})" );
    bad( R"({"atoms":["p"],"K":"0x4","entries":{}})" );
    bad( R"({"atoms":["p"],"K":"p &","entries":{}})" );
    bad( R"({"atoms":["p"],"K":"0x2","entries":{"0x0":"0x9"}})" );
    bad( R"({"atoms":["a","b","c","d","e"],"K":"a","entries":{}})" );
    bad( R"({"atoms":["p"],"K":2,"entries":{}})" );
}

TEST_CASE( "K parsing" )
{
    auto sig = testing::pq();
    CHECK( io::parse_k( "0x8", sig ) == prop( { 3 } ) );
    CHECK( io::parse_k( "p & q", sig ) == prop( { 3 } ) );
    CHECK_THROWS_AS( io::parse_k( "0x1f", sig ), io::FormatError );
    CHECK_THROWS_AS( io::read_text_file( "/nonexistent/file.json" ), io::FormatError );
}
