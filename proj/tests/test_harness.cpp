#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace srev;
using testing::pq;
using testing::prop;
using testing::sys_a;
using testing::sys_b;

namespace {

// A system up to rank relabelling: the chain of spheres with inner flags.
using Shape = std::vector< std::pair< std::uint64_t, bool > >;

Shape shape_of( const TwoLevelSystem& t )
{
    Shape out;
    for ( const auto& s : spheres_of( t ) )
        out.emplace_back( s.worlds.code(), s.inner );
    return out;
}

// Every rank function into {implausible, 0..3} with every cutoff, reduced to
// its sphere chain. Independent of the canonical enumeration.
std::set< Shape > brute_force_shapes()
{
    std::set< Shape > out;
    for ( int code = 0; code < 625; ++code ) {
        std::vector< int > ranks;
        for ( int w = 0, c = code; w < 4; ++w, c /= 5 )
            ranks.push_back( c % 5 - 1 );
        if ( std::find( ranks.begin(), ranks.end(), 0 ) == ranks.end() )
            continue;
        for ( int cutoff = 0; cutoff <= 3; ++cutoff ) {
            auto s = oracle::from_ranks( ranks, cutoff );
            Shape shape;
            for ( const auto& x : s.inner )
                shape.emplace_back( oracle::code_of( x ), true );
            for ( const auto& x : s.outer )
                shape.emplace_back( oracle::code_of( x ), false );
            out.insert( shape );
        }
    }
    return out;
}

} // namespace

TEST_CASE( "enumeration counts" )
{
    Signature p( { "p" } );
    auto k_p = models( parse_formula( "p", p ), p );
    auto systems = enumerate_systems( { p, k_p, EnumerationMode::exhaustive } );
    REQUIRE( systems.size() == 3 );
    CHECK( systems[ 0 ] == TwoLevelSystem( p, { std::nullopt, 0u }, 0 ) );
    CHECK( systems[ 1 ] == TwoLevelSystem( p, { 1u, 0u }, 0 ) );
    CHECK( systems[ 2 ] == TwoLevelSystem( p, { 1u, 0u }, 1 ) );

    auto top = enumerate_systems( { p, Proposition::universe( 2 ), EnumerationMode::exhaustive } );
    REQUIRE( top.size() == 1 );
    CHECK( top[ 0 ] == TwoLevelSystem( p, { 0u, 0u }, 0 ) );

    CHECK( enumerate_systems( { p, std::nullopt, EnumerationMode::exhaustive } ).size() == 7 );
    // Ordered set partitions of 4 worlds.
    CHECK( enumerate_grove_systems( { pq(), std::nullopt, EnumerationMode::exhaustive } ).size() == 75 );
    CHECK( enumerate_grove_systems( { p, std::nullopt, EnumerationMode::exhaustive } ).size() == 3 );
}

TEST_CASE( "exhaustive enumeration is complete and duplicate-free" )
{
    auto systems = enumerate_systems( { pq(), std::nullopt, EnumerationMode::exhaustive } );
    // Sum over nonempty plausible sets X of sum_m m * m! * S(|X|, m).
    CHECK( systems.size() == 4 * 1 + 6 * 5 + 4 * 31 + 233 );
    std::set< Shape > seen;
    for ( const auto& t : systems ) {
        CHECK( validate_system( t ).ok );
        CHECK( seen.insert( shape_of( t ) ).second );
    }
    CHECK( seen == brute_force_shapes() );
}

TEST_CASE( "sampling is seeded and canonical" )
{
    Signature pqr( { "p", "q", "r" } );
    EnumerationSpec spec{ pqr, std::nullopt, EnumerationMode::sample, 10, 42 };
    auto first = enumerate_systems( spec );
    CHECK( first.size() == 10 );
    CHECK( enumerate_systems( spec ) == first );
    spec.seed = 43;
    CHECK( enumerate_systems( spec ) != first );
    for ( const auto& t : first ) {
        CHECK( validate_system( t ).ok );
        std::uint32_t top = 0;
        for ( const auto& r : t.ranks() )
            if ( r )
                top = std::max( top, *r );
        CHECK( top < default_sample_levels );
        CHECK( spheres_of( t ).size() == top + 1 );
    }

    spec.k = models( parse_formula( "p & q", pqr ), pqr );
    for ( const auto& t : enumerate_systems( spec ) )
        CHECK( t.center() == *spec.k );

    EnumerationSpec grove{ pqr, std::nullopt, EnumerationMode::sample, 20, 7 };
    for ( const auto& g : enumerate_grove_systems( grove ) )
        CHECK( g.max_rank() < default_sample_levels );
    CHECK( enumerate_grove_systems( grove ) == enumerate_grove_systems( grove ) );
}

TEST_CASE( "spec caps" )
{
    Signature pqr( { "p", "q", "r" } );
    Signature four( { "a", "b", "c", "d" } );
    CHECK_THROWS_AS( enumerate_systems( { pqr, std::nullopt, EnumerationMode::exhaustive } ), EnumerationError );
    CHECK_THROWS_AS( enumerate_systems( { four, std::nullopt, EnumerationMode::sample, 5, 1 } ), EnumerationError );
    CHECK_THROWS_AS( enumerate_systems( { pqr, std::nullopt, EnumerationMode::sample, 5 } ), EnumerationError );
    CHECK_THROWS_AS( enumerate_systems( { pq(), Proposition( 4 ), EnumerationMode::exhaustive } ), EnumerationError );
    CHECK_THROWS_AS( enumerate_grove_systems( { pqr, std::nullopt, EnumerationMode::exhaustive } ), EnumerationError );
}

TEST_CASE( "direction 2 to 1" )
{
    CHECK( verify_direction_2_to_1( sys_a() ).pass );
    CHECK( verify_direction_2_to_1( TwoLevelSystem( pq(), { std::nullopt, std::nullopt, std::nullopt, 0u }, 0 ) ).pass );
    Signature p( { "p" } );
    for ( const auto& t : enumerate_systems( { p, models( Formula::atom( 0 ), p ), EnumerationMode::exhaustive } ) )
        CHECK( verify_direction_2_to_1( t ).pass );

    auto invalid = verify_direction_2_to_1( TwoLevelSystem( pq(), { 1u, 1u, 1u, 1u }, 1 ) );
    CHECK_FALSE( invalid.applicable );
    CHECK_FALSE( invalid.pass );
}

TEST_CASE( "direction 1 to 2" )
{
    auto a = verify_direction_1_to_2( table_of( sys_a() ) );
    CHECK( a.applicable );
    CHECK( a.pass );
    CHECK( a.checks > 0 );
    CHECK( verify_direction_1_to_2( table_of( sys_b().as_two_level() ) ).pass );

    auto m1 = verify_direction_1_to_2( table_of( sys_a() ).with_entry( 0x1, 0x5 ) );
    CHECK_FALSE( m1.applicable );
}

TEST_CASE( "direction 1 to 3" )
{
    CHECK( verify_direction_1_to_3( table_of( sys_a() ) ).pass );
    auto flat = ExtensionalOperator::from_function( Signature( { "p" } ), Proposition::from_worlds( 2, { 1 } ),
                                                    []( PropCode ) { return PropCode{ 0x2 }; } );
    auto r = verify_direction_1_to_3( flat );
    CHECK( r.applicable );
    CHECK( r.pass );
    CHECK_FALSE( verify_direction_1_to_3( table_of( sys_a() ).with_entry( 0x1, 0x5 ) ).applicable );
}

TEST_CASE( "theorem report" )
{
    Signature p( { "p" } );
    EnumerationSpec spec{ p, models( Formula::atom( 0 ), p ), EnumerationMode::exhaustive };
    auto report = verify_theorem( spec, 1 );
    CHECK( report.pass() );
    CHECK( report.records.size() == 3 );
    CHECK( report.distinct_tables == 3 );
    CHECK( report.observations.size() == 5 );
    auto text = to_text( report );
    CHECK( text.find( "systems: 3\n" ) != std::string::npos );
    CHECK( text.rfind( "result: PASS\n" ) == text.size() - 13 );
    CHECK( to_json( report ).find( "\"pass\": true" ) != std::string::npos );
}

TEST_CASE( "reports do not depend on the worker count" )
{
    Signature pqr( { "p", "q", "r" } );
    EnumerationSpec spec{ pqr, std::nullopt, EnumerationMode::sample, 12, 3 };
    auto one = verify_theorem( spec, 1 );
    auto four = verify_theorem( spec, 4 );
    CHECK( to_text( one ) == to_text( four ) );
    CHECK( to_json( one ) == to_json( four ) );

    EnumerationSpec full{ pq(), std::nullopt, EnumerationMode::exhaustive };
    auto g1 = verify_grove( full, 1 );
    auto g3 = verify_grove( full, 3 );
    CHECK( g1.pass() );
    CHECK( g1.systems == g3.systems );
    CHECK( g1.failing.size() == g3.failing.size() );
}

TEST_CASE( "mutation testing on SYS-A" )
{
    auto catalog = mutant_catalog( sys_a() );
    REQUIRE( catalog.size() >= 6 );
    CHECK( catalog[ 0 ].name == "identity" );
    CHECK( catalog[ 0 ].table == table_of( sys_a() ) );

    auto find = [ & ]( std::string_view name ) -> const Mutant& {
        for ( const auto& m : catalog )
            if ( m.name == name )
                return m;
        FAIL( "no mutant " << name );
        return catalog.front();
    };
    CHECK( find( "accept-non-credible" ).table == table_of( sys_a() ).with_entry( 0x1, 0x5 ) );

    auto report = run_mutation_tests( sys_a() );
    CHECK( report.pass() );
    std::size_t caught = 0;
    for ( const auto& r : report.results ) {
        CHECK( r.applicable );
        CHECK( r.witnesses_replay );
        if ( r.name == "identity" )
            CHECK( r.failures.empty() );
        else if ( !r.failures.empty() )
            ++caught;
    }
    CHECK( caught >= 5 );

    auto failing = [ & ]( std::string_view name ) {
        std::set< Postulate > out;
        for ( const auto& r : report.results )
            if ( r.name == name )
                for ( const auto& [ id, w ] : r.failures )
                    out.insert( id );
        return out;
    };
    CHECK( failing( "accept-non-credible" ).count( Postulate::weak_relative_success ) == 1 );
    CHECK( failing( "break-extensionality" ) == std::set< Postulate >{ Postulate::extensionality } );
    CHECK( failing( "break-n-persistence" ).count( Postulate::n_persistence ) == 1 );
    CHECK( failing( "break-inclusion" ).count( Postulate::inclusion ) == 1 );
    CHECK( failing( "stray-world" ).count( Postulate::n_recovery ) == 1 );
    CHECK( failing( "break-disjunctive-overlap" ).count( Postulate::disjunctive_overlap ) == 1 );
    CHECK_FALSE( failing( "drop-center-in-contraction" ).empty() );

    auto text = to_text( report, pq() );
    CHECK( text.find( "identity: PASS" ) != std::string::npos );
    CHECK( text.rfind( "result: PASS\n" ) != std::string::npos );
}

TEST_CASE( "mutants that need structure the base lacks are skipped" )
{
    // Only the center: nothing is rejected or contracted.
    TwoLevelSystem flat( pq(), { 0u, 0u, 0u, 0u }, 0 );
    auto report = run_mutation_tests( flat );
    for ( const auto& r : report.results ) {
        if ( r.name == "accept-non-credible" || r.name == "drop-center-in-contraction" || r.name == "stray-world"
             || r.name == "break-disjunctive-overlap" || r.name == "break-n-persistence" )
            CHECK_FALSE( r.applicable );
    }
    CHECK( report.pass() );
}

TEST_CASE( "observations over a population" )
{
    EnumerationSpec spec{ pq(), std::nullopt, EnumerationMode::exhaustive };
    std::vector< ExtensionalOperator > population;
    for ( const auto& t : enumerate_systems( spec ) )
        population.push_back( table_of( t ) );
    for ( const auto& m : mutant_catalog( sys_a() ) )
        population.push_back( m.table );
    auto tallies = check_observations( population, 2 );
    REQUIRE( tallies.size() == 5 );
    for ( const auto& t : tallies ) {
        CHECK( t.operators == population.size() );
        CHECK( t.violations == 0 );
        CHECK( t.premises_held >= 391 );
    }
}
