#include "srev/harness.hpp"

#include <benchmark/benchmark.h>

using namespace srev;

namespace {

Signature atoms( std::size_t n )
{
    static const std::vector< std::string > names = { "p", "q", "r", "s" };
    return Signature( std::vector< std::string >( names.begin(), names.begin() + static_cast< long >( n ) ) );
}

TwoLevelSystem sample_system( std::size_t n, std::uint64_t seed )
{
    EnumerationSpec spec{ atoms( n ), std::nullopt, EnumerationMode::sample, 1, seed };
    return enumerate_systems( spec ).front();
}

void bm_models( benchmark::State& state )
{
    auto sig = atoms( static_cast< std::size_t >( state.range( 0 ) ) );
    auto f = parse_formula( "(p -> q) & ~(q <-> p) | p", sig );
    for ( auto _ : state )
        benchmark::DoNotOptimize( models( f, sig ) );
}
BENCHMARK( bm_models )->DenseRange( 2, 4 );

void bm_induced_table( benchmark::State& state )
{
    auto t = sample_system( 3, 11 );
    for ( auto _ : state )
        benchmark::DoNotOptimize( table_of( t ) );
}
BENCHMARK( bm_induced_table );

void bm_theorem_suite( benchmark::State& state )
{
    auto op = table_of( sample_system( static_cast< std::size_t >( state.range( 0 ) ), 11 ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( check_suite( representation_suite(), op ) );
}
BENCHMARK( bm_theorem_suite )->DenseRange( 2, 3 )->Unit( benchmark::kMillisecond );

void bm_construct_spheres( benchmark::State& state )
{
    auto op = table_of( sample_system( 3, 11 ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( construct_spheres( op ) );
}
BENCHMARK( bm_construct_spheres );

void bm_enumerate_n2( benchmark::State& state )
{
    EnumerationSpec spec{ atoms( 2 ), std::nullopt, EnumerationMode::exhaustive };
    for ( auto _ : state )
        benchmark::DoNotOptimize( enumerate_systems( spec ) );
}
BENCHMARK( bm_enumerate_n2 );

} // namespace

BENCHMARK_MAIN();
