#pragma once

#include "oracle.hpp"

#include "srev/harness.hpp"
#include "srev/io.hpp"
#include "srev/operators.hpp"
#include "srev/spheres.hpp"

#include <filesystem>
#include <string>

namespace testing {

inline std::filesystem::path data_path( const std::string& name ) { return std::filesystem::path( SREV_TEST_DATA ) / name; }

inline srev::Signature pq() { return srev::Signature( { "p", "q" } ); }

inline srev::TwoLevelSystem sys_a()
{
    return srev::TwoLevelSystem( pq(), { std::nullopt, 2u, 1u, 0u }, 1 );
}

inline srev::SphereSystem sys_b() { return srev::SphereSystem( pq(), { 3, 2, 1, 0 } ); }

inline srev::Proposition prop( std::initializer_list< srev::World > worlds, std::size_t world_count = 4 )
{
    return srev::Proposition::from_worlds( world_count, worlds );
}

inline oracle::Worlds worlds_of( const srev::Proposition& p )
{
    oracle::Worlds out;
    for ( auto w : p.worlds() )
        out.insert( static_cast< int >( w ) );
    return out;
}

inline oracle::Frame frame_of( const srev::ExtensionalOperator& op )
{
    const int n = static_cast< int >( op.sig().size() );
    return { n, worlds_of( op.k() ), [ op, n ]( const oracle::Worlds& a ) {
                return oracle::from_code( op[ static_cast< srev::PropCode >( oracle::code_of( a ) ) ], n );
            } };
}

inline std::vector< int > oracle_ranks( const srev::TwoLevelSystem& t )
{
    std::vector< int > out;
    for ( const auto& r : t.ranks() )
        out.push_back( r ? static_cast< int >( *r ) : -1 );
    return out;
}

} // namespace testing
