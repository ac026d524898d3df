#include "srev/harness.hpp"

#include "srev/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace srev {

namespace {

// Runs fn(i) for i in [0, count). Results must be written by index so the
// schedule cannot leak into the output.
template < typename Fn >
void parallel_for( std::size_t count, unsigned threads, Fn&& fn )
{
    threads = static_cast< unsigned >( std::min< std::size_t >( std::max( threads, 1u ), std::max< std::size_t >( count, 1 ) ) );
    if ( threads == 1 ) {
        for ( std::size_t i = 0; i < count; ++i )
            fn( i );
        return;
    }
    std::atomic< std::size_t > next{ 0 };
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector< std::thread > pool;
    for ( unsigned t = 0; t < threads; ++t ) {
        pool.emplace_back( [ & ] {
            for ( std::size_t i; ( i = next.fetch_add( 1 ) ) < count; ) {
                try {
                    fn( i );
                } catch ( ... ) {
                    std::lock_guard lock( error_mutex );
                    if ( !error )
                        error = std::current_exception();
                }
            }
        } );
    }
    for ( auto& th : pool )
        th.join();
    if ( error )
        std::rethrow_exception( error );
}

// Uniform draw from [0, bound). std::uniform_int_distribution is not
// specified bit-for-bit, so reports would differ between standard libraries.
std::uint64_t draw( std::mt19937_64& rng, std::uint64_t bound )
{
    const auto limit = std::numeric_limits< std::uint64_t >::max() - std::numeric_limits< std::uint64_t >::max() % bound;
    for ( ;; ) {
        auto x = rng();
        if ( x < limit )
            return x % bound;
    }
}

std::string hex( PropCode c ) { return Proposition::from_code( 32, c ).to_hex(); }

// Highest used finite rank if the finite ranks are exactly {from, ..., L},
// nullopt otherwise. An empty set of finite ranks gives from - 1.
std::optional< std::int64_t > contiguous_top( const std::vector< Rank >& ranks, std::uint32_t from )
{
    std::vector< bool > used;
    for ( const auto& r : ranks ) {
        if ( !r )
            continue;
        if ( *r >= used.size() )
            used.resize( *r + 1, false );
        used[ *r ] = true;
    }
    if ( used.empty() )
        return std::int64_t{ from } - 1;
    for ( std::size_t v = from; v < used.size(); ++v )
        if ( !used[ v ] )
            return std::nullopt;
    return static_cast< std::int64_t >( used.size() ) - 1;
}

// Every canonical rank vector around `k`. Rest worlds take digits 0..r where 0
// is implausible (or, for full systems, 1..r).
template < typename Emit >
void for_each_rank_vector( const Proposition& k, bool allow_implausible, Emit&& emit )
{
    const auto n = k.world_count();
    std::vector< World > rest;
    for ( World w = 0; w < n; ++w )
        if ( !k.contains( w ) )
            rest.push_back( w );
    const auto r = static_cast< std::uint32_t >( rest.size() );
    const std::uint32_t low = allow_implausible ? 0 : 1;

    std::vector< std::uint32_t > digits( rest.size(), low );
    for ( ;; ) {
        std::vector< Rank > ranks( n );
        for ( World w = 0; w < n; ++w )
            if ( k.contains( w ) )
                ranks[ w ] = 0u;
        for ( std::size_t i = 0; i < rest.size(); ++i )
            if ( digits[ i ] != 0 )
                ranks[ rest[ i ] ] = digits[ i ];
        if ( auto top = contiguous_top( ranks, 0 ) )
            emit( ranks, static_cast< std::uint32_t >( *top ) );

        std::size_t i = 0;
        while ( i < digits.size() && digits[ i ] == r ) {
            digits[ i ] = low;
            ++i;
        }
        if ( i == digits.size() )
            return;
        ++digits[ i ];
    }
}

// Draws a canonical rank vector. Ranks come from {none, from..levels-1}
// (none only if allowed) and the draw is rejected unless canonical.
std::vector< Rank > sample_ranks( std::mt19937_64& rng, const Signature& sig, const std::optional< Proposition >& k,
                                  std::uint32_t levels, bool allow_implausible )
{
    const auto n = sig.world_count();
    const std::uint32_t from = k ? 1 : 0;
    const std::uint32_t choices = levels - from + ( allow_implausible ? 1 : 0 );
    for ( ;; ) {
        std::vector< Rank > ranks( n );
        for ( World w = 0; w < n; ++w ) {
            if ( k && k->contains( w ) ) {
                ranks[ w ] = 0u;
                continue;
            }
            auto d = static_cast< std::uint32_t >( draw( rng, choices ) );
            if ( allow_implausible ) {
                if ( d != 0 )
                    ranks[ w ] = from + d - 1;
            } else {
                ranks[ w ] = from + d;
            }
        }
        auto top = contiguous_top( ranks, 0 );
        if ( top && *top >= 0 )
            return ranks;
    }
}

std::vector< std::uint32_t > total_ranks( const std::vector< Rank >& ranks )
{
    std::vector< std::uint32_t > out;
    out.reserve( ranks.size() );
    for ( const auto& r : ranks )
        out.push_back( *r );
    return out;
}

std::vector< Proposition > centers( const EnumerationSpec& spec )
{
    if ( spec.k )
        return { *spec.k };
    std::vector< Proposition > out;
    const auto n = spec.sig.world_count();
    for ( PropCode c = 1; c < ( PropCode{ 1 } << n ); ++c )
        out.push_back( Proposition::from_code( n, c ) );
    return out;
}

void run_suite( DirectionReport& report, std::span< const Postulate > ids, const ExtensionalOperator& op,
                const CheckContext& ctx, std::string_view what )
{
    for ( auto id : ids ) {
        auto verdict = check( id, op, ctx );
        ++report.checks;
        if ( !verdict.pass )
            report.fail( std::string( what ) + ": " + describe( id, verdict ) );
    }
}

std::optional< PropCode > first_difference( const ExtensionalOperator& a, const ExtensionalOperator& b )
{
    if ( a.k_code() != b.k_code() || a.size() != b.size() )
        return PropCode{ 0 };
    for ( PropCode p = 0; p < a.size(); ++p )
        if ( a[ p ] != b[ p ] )
            return p;
    return std::nullopt;
}

void expect_same( DirectionReport& report, const ExtensionalOperator& got, const ExtensionalOperator& want,
                  std::string_view what )
{
    ++report.checks;
    if ( auto p = first_difference( got, want ) )
        report.fail( std::string( what ) + " differs at " + hex( *p ) + ": " + hex( got[ *p ] ) + " vs "
                     + hex( want[ *p ] ) );
}

bool suite_passes( const ExtensionalOperator& odot )
{
    return std::all_of( representation_suite().begin(), representation_suite().end(),
                        [ & ]( Postulate p ) { return check( p, odot ).pass; } );
}

const char* mode_name( EnumerationMode m ) { return m == EnumerationMode::exhaustive ? "exhaustive" : "sample"; }

} // namespace

// ---------------------------------------------------------------------------
// Enumeration

void validate_spec( const EnumerationSpec& spec )
{
    const auto atoms = spec.sig.size();
    if ( spec.mode == EnumerationMode::exhaustive && atoms > max_exhaustive_atoms )
        throw EnumerationError( "exhaustive enumeration supports at most " + std::to_string( max_exhaustive_atoms )
                                + " atoms; use sample mode" );
    if ( spec.mode == EnumerationMode::sample ) {
        if ( atoms > max_sample_atoms )
            throw EnumerationError( "sampling supports at most " + std::to_string( max_sample_atoms ) + " atoms" );
        if ( !spec.seed )
            throw EnumerationError( "sample mode requires a seed" );
        if ( spec.max_levels < 1 )
            throw EnumerationError( "sample mode needs at least one level" );
    }
    if ( spec.k ) {
        if ( spec.k->world_count() != spec.sig.world_count() )
            throw EnumerationError( "K does not match the signature" );
        if ( spec.k->empty() )
            throw EnumerationError( "K must be consistent" );
        if ( spec.mode == EnumerationMode::sample && spec.max_levels < 2 && !spec.k->full() )
            throw EnumerationError( "one level cannot rank worlds outside K" );
    }
}

std::vector< TwoLevelSystem > enumerate_systems( const EnumerationSpec& spec )
{
    validate_spec( spec );
    std::vector< TwoLevelSystem > out;
    if ( spec.mode == EnumerationMode::exhaustive ) {
        for ( const auto& k : centers( spec ) )
            for_each_rank_vector( k, true, [ & ]( const std::vector< Rank >& ranks, std::uint32_t top ) {
                for ( std::uint32_t cutoff = 0; cutoff <= top; ++cutoff )
                    out.emplace_back( spec.sig, ranks, cutoff );
            } );
        return out;
    }
    std::mt19937_64 rng( *spec.seed );
    for ( std::size_t i = 0; i < spec.sample_count; ++i ) {
        auto ranks = sample_ranks( rng, spec.sig, spec.k, spec.max_levels, true );
        auto top = static_cast< std::uint32_t >( *contiguous_top( ranks, 0 ) );
        auto cutoff = static_cast< std::uint32_t >( draw( rng, std::uint64_t{ top } + 1 ) );
        out.emplace_back( spec.sig, std::move( ranks ), cutoff );
    }
    return out;
}

std::vector< SphereSystem > enumerate_grove_systems( const EnumerationSpec& spec )
{
    validate_spec( spec );
    std::vector< SphereSystem > out;
    if ( spec.mode == EnumerationMode::exhaustive ) {
        for ( const auto& k : centers( spec ) )
            for_each_rank_vector( k, false, [ & ]( const std::vector< Rank >& ranks, std::uint32_t ) {
                out.emplace_back( spec.sig, total_ranks( ranks ) );
            } );
        return out;
    }
    std::mt19937_64 rng( *spec.seed );
    for ( std::size_t i = 0; i < spec.sample_count; ++i )
        out.emplace_back( spec.sig, total_ranks( sample_ranks( rng, spec.sig, spec.k, spec.max_levels, false ) ) );
    return out;
}

std::string sampling_note( const EnumerationSpec& spec )
{
    if ( spec.mode == EnumerationMode::exhaustive )
        return "exhaustive: every canonical rank vector and cutoff";
    std::ostringstream out;
    out << "sample: seed " << *spec.seed << ", " << spec.sample_count
        << " draws, uniform over canonical rank vectors with at most " << spec.max_levels
        << " levels, then a uniform cutoff (mt19937_64, rejection sampling)";
    return out.str();
}

unsigned default_threads()
{
    if ( const char* env = std::getenv( "SPHERES_REV_THREADS" ) ) {
        char* end = nullptr;
        auto v = std::strtoul( env, &end, 10 );
        if ( end != env && *end == '\0' && v > 0 )
            return static_cast< unsigned >( std::min< unsigned long >( v, 256 ) );
    }
    return std::max( 1u, std::thread::hardware_concurrency() );
}

// ---------------------------------------------------------------------------
// Directions

void DirectionReport::fail( std::string why )
{
    pass = false;
    failures.push_back( std::move( why ) );
}

std::string describe( Postulate p, const Verdict& v )
{
    std::string out = std::string( v.pass ? "PASS " : "FAIL " ) + std::string( info( p ).name );
    if ( v.witness )
        out += "  " + to_string( *v.witness );
    else if ( !v.note.empty() )
        out += "  (" + v.note + ")";
    return out;
}

DirectionReport verify_direction_2_to_1( const TwoLevelSystem& t )
{
    DirectionReport report;
    if ( auto verdict = validate_system( t ); !verdict ) {
        report.applicable = false;
        report.fail( "not a valid two-level system: " + verdict.failure );
        return report;
    }
    run_suite( report, representation_suite(), table_of( t ), {}, "suite" );
    return report;
}

namespace {

// The converse directions without their guard, for callers that already know
// the suite passes.
DirectionReport one_to_two( const ExtensionalOperator& odot )
{
    DirectionReport report;
    auto built = construct_spheres( odot );
    if ( auto* failure = std::get_if< ConstructionFailure >( &built ) ) {
        std::string why = "construction failed: " + failure->reason;
        if ( failure->sphere )
            why += " (sphere " + hex( *failure->sphere ) + ")";
        report.fail( std::move( why ) );
        return report;
    }
    const auto& t = std::get< TwoLevelSystem >( built );
    ++report.checks;
    if ( auto verdict = validate_system( t ); !verdict )
        report.fail( "constructed system invalid: " + verdict.failure );
    expect_same( report, table_of( t ), odot, "induced table" );

    for ( PropCode p = 0; p < odot.size(); ++p ) {
        auto a = odot.proposition( p );
        auto union_of = s_alpha_union( odot, a );
        if ( !union_of )
            continue;
        ++report.checks;
        auto sphere = min_sphere( t, a );
        if ( !sphere )
            report.fail( "no sphere meets " + hex( p ) + " although the guard holds" );
        else if ( sphere->worlds != *union_of )
            report.fail( "S(a) != S_a at " + hex( p ) + ": " + union_of->to_hex() + " vs " + sphere->worlds.to_hex() );
    }
    return report;
}

DirectionReport one_to_three( const ExtensionalOperator& odot )
{
    DirectionReport report;
    auto [ star, cred ] = extract_revision_and_credibility( odot );
    run_suite( report, revision_postulates(), star, {}, "extracted revision" );

    CheckContext high{ cred.high, {} };
    run_suite( report,
               std::array{ Postulate::element_consistency, Postulate::credibility_lower_bounding,
                           Postulate::single_sentence_closure },
               odot, high, "C_H" );
    CheckContext low{ cred.low, {} };
    run_suite( report, std::array{ Postulate::credibility_of_logical_equivalents, Postulate::element_consistency },
               odot, low, "C_L" );

    ++report.checks;
    if ( auto both = ( cred.high & cred.low ).members(); !both.empty() )
        report.fail( "C_H and C_L share " + hex( both.front() ) );

    for ( const auto& [ name, set ] :
          { std::pair{ "(C_H|C_L - *)", cred.credible() }, std::pair{ "(C_H - *)", cred.high } } ) {
        auto verdict = check_condition_c_star( set, star );
        ++report.checks;
        if ( !verdict.pass )
            report.fail( std::string( name ) + ": " + describe( Postulate::condition_c_star, verdict ) );
    }

    expect_same( report, induce_two_level( star, cred ), odot, "re-induced table" );
    return report;
}

DirectionReport not_applicable_report()
{
    DirectionReport report;
    report.applicable = false;
    return report;
}

} // namespace

DirectionReport verify_direction_1_to_2( const ExtensionalOperator& odot )
{
    return suite_passes( odot ) ? one_to_two( odot ) : not_applicable_report();
}

DirectionReport verify_direction_1_to_3( const ExtensionalOperator& odot )
{
    return suite_passes( odot ) ? one_to_three( odot ) : not_applicable_report();
}

// ---------------------------------------------------------------------------
// Observations

std::vector< ObservationTally > check_observations( std::span< const ExtensionalOperator > population,
                                                    unsigned threads )
{
    const auto rows = observations();
    std::vector< std::vector< ImplicationVerdict > > verdicts( population.size() );
    parallel_for( population.size(), threads, [ & ]( std::size_t i ) {
        for ( const auto& imp : rows )
            verdicts[ i ].push_back( check_implication( imp, population[ i ] ) );
    } );

    std::vector< ObservationTally > out;
    for ( std::size_t r = 0; r < rows.size(); ++r ) {
        ObservationTally tally;
        tally.name = std::string( rows[ r ].name );
        for ( std::size_t i = 0; i < population.size(); ++i ) {
            const auto& v = verdicts[ i ][ r ];
            ++tally.operators;
            if ( v.premises_hold )
                ++tally.premises_held;
            if ( v.violated() ) {
                ++tally.violations;
                if ( tally.witnesses.size() < 5 )
                    tally.witnesses.push_back( "operator #" + std::to_string( i ) + ": "
                                               + ( v.witness ? to_string( *v.witness ) : "" ) );
            }
        }
        out.push_back( std::move( tally ) );
    }
    return out;
}

// ---------------------------------------------------------------------------
// Theorem report

bool TheoremReport::pass() const
{
    return std::all_of( records.begin(), records.end(), []( const auto& r ) { return r.pass(); } )
           && std::all_of( observations.begin(), observations.end(),
                           []( const auto& o ) { return o.violations == 0; } );
}

TheoremReport verify_theorem( const EnumerationSpec& spec, unsigned threads )
{
    auto systems = enumerate_systems( spec );

    TheoremReport report;
    report.atoms = spec.sig.size();
    report.mode = spec.mode;
    report.k = spec.k ? spec.k->to_hex() : "all";
    report.seed = spec.mode == EnumerationMode::sample ? spec.seed : std::nullopt;
    report.requested = spec.mode == EnumerationMode::sample ? spec.sample_count : systems.size();
    report.sampling = sampling_note( spec );
    report.records.resize( systems.size() );

    std::vector< std::optional< ExtensionalOperator > > tables( systems.size() );
    parallel_for( systems.size(), threads, [ & ]( std::size_t i ) {
        const auto& t = systems[ i ];
        auto& rec = report.records[ i ];
        rec.system = io::write_system( t );
        rec.two_to_one = verify_direction_2_to_1( t );
        if ( !rec.two_to_one.applicable )
            return;
        auto odot = table_of( t );
        // The induced table must satisfy the guard of the converse directions;
        // 2->1 has just run the same suite on it.
        if ( rec.two_to_one.pass ) {
            rec.one_to_two = one_to_two( odot );
            rec.one_to_three = one_to_three( odot );
        } else {
            rec.one_to_two.fail( "induced table fails the suite" );
            rec.one_to_three.fail( "induced table fails the suite" );
        }
        tables[ i ] = std::move( odot );
    } );

    std::set< std::pair< PropCode, std::vector< PropCode > > > seen;
    std::vector< ExtensionalOperator > population;
    for ( auto& table : tables ) {
        if ( !table )
            continue;
        auto key = std::pair{ table->k_code(), std::vector< PropCode >( table->entries().begin(), table->entries().end() ) };
        if ( seen.insert( std::move( key ) ).second )
            population.push_back( std::move( *table ) );
    }
    report.distinct_tables = population.size();
    for ( const auto& rec : report.records )
        report.checks += rec.two_to_one.checks + rec.one_to_two.checks + rec.one_to_three.checks;
    report.observations = check_observations( population, threads );
    return report;
}

namespace {

struct DirectionCount
{
    std::size_t pass = 0;
    std::size_t applicable = 0;
};

DirectionCount count( const TheoremReport& r, DirectionReport SystemRecord::*field )
{
    DirectionCount c;
    for ( const auto& rec : r.records ) {
        const auto& d = rec.*field;
        if ( d.applicable )
            ++c.applicable;
        if ( d.applicable && d.pass )
            ++c.pass;
    }
    return c;
}

constexpr std::pair< const char*, DirectionReport SystemRecord::* > directions[] = {
    { "2->1", &SystemRecord::two_to_one },
    { "1->2", &SystemRecord::one_to_two },
    { "1->3", &SystemRecord::one_to_three },
};

} // namespace

std::string to_text( const TheoremReport& r )
{
    std::ostringstream out;
    out << "verify-theorem atoms=" << r.atoms << " mode=" << mode_name( r.mode ) << " K=" << r.k;
    if ( r.seed )
        out << " seed=" << *r.seed;
    out << "\n";
    out << "sampling: " << r.sampling << "\n";
    out << "systems: " << r.records.size() << "\n";
    out << "distinct tables: " << r.distinct_tables << "\n";
    out << "checks: " << r.checks << "\n";
    for ( const auto& [ name, field ] : directions ) {
        auto c = count( r, field );
        out << "direction " << name << ": " << ( c.pass == r.records.size() ? "PASS" : "FAIL" ) << " " << c.pass
            << "/" << r.records.size() << "\n";
    }
    for ( const auto& o : r.observations ) {
        out << "observation " << o.name << ": " << ( o.violations == 0 ? "PASS" : "FAIL" ) << " premises held "
            << o.premises_held << "/" << o.operators << ", violations " << o.violations << "\n";
        for ( const auto& w : o.witnesses )
            out << "  " << w << "\n";
    }
    for ( const auto& rec : r.records ) {
        if ( rec.pass() )
            continue;
        out << "counterexample " << rec.system << "\n";
        for ( const auto& [ name, field ] : directions )
            for ( const auto& f : ( rec.*field ).failures )
                out << "  " << name << ": " << f << "\n";
    }
    out << "result: " << ( r.pass() ? "PASS" : "FAIL" ) << "\n";
    return out.str();
}

std::string to_json( const TheoremReport& r )
{
    using json = nlohmann::ordered_json;
    json doc;
    doc[ "atoms" ] = r.atoms;
    doc[ "mode" ] = mode_name( r.mode );
    doc[ "K" ] = r.k;
    doc[ "seed" ] = r.seed ? json( *r.seed ) : json( nullptr );
    doc[ "sampling" ] = r.sampling;
    doc[ "systems" ] = r.records.size();
    doc[ "distinct_tables" ] = r.distinct_tables;
    doc[ "checks" ] = r.checks;
    json dirs = json::object();
    for ( const auto& [ name, field ] : directions ) {
        auto c = count( r, field );
        dirs[ name ] = { { "pass", c.pass }, { "total", r.records.size() } };
    }
    doc[ "directions" ] = std::move( dirs );
    json obs = json::array();
    for ( const auto& o : r.observations )
        obs.push_back( { { "name", o.name },
                         { "operators", o.operators },
                         { "premises_held", o.premises_held },
                         { "violations", o.violations },
                         { "witnesses", o.witnesses } } );
    doc[ "observations" ] = std::move( obs );
    json bad = json::array();
    for ( const auto& rec : r.records ) {
        if ( rec.pass() )
            continue;
        json failures = json::object();
        for ( const auto& [ name, field ] : directions )
            failures[ name ] = ( rec.*field ).failures;
        bad.push_back( { { "system", json::parse( rec.system ) }, { "failures", std::move( failures ) } } );
    }
    doc[ "counterexamples" ] = std::move( bad );
    doc[ "pass" ] = r.pass();
    return doc.dump( 2 ) + "\n";
}

// ---------------------------------------------------------------------------
// Grove operators

GroveReport verify_grove( const EnumerationSpec& spec, unsigned threads )
{
    auto systems = enumerate_grove_systems( spec );
    struct Outcome
    {
        bool revision = true;
        bool contraction = true;
        bool identities = true;
        std::vector< std::string > failures;
    };
    std::vector< Outcome > outcomes( systems.size() );
    parallel_for( systems.size(), threads, [ & ]( std::size_t i ) {
        auto& out = outcomes[ i ];
        auto star = revision_table( systems[ i ] );
        auto div = contraction_table( systems[ i ] );
        for ( auto id : revision_postulates() )
            if ( auto v = check( id, star ); !v.pass ) {
                out.revision = false;
                out.failures.push_back( "revision: " + describe( id, v ) );
            }
        for ( auto id : contraction_postulates() )
            if ( auto v = check( id, div ); !v.pass ) {
                out.contraction = false;
                out.failures.push_back( "contraction: " + describe( id, v ) );
            }
        auto identity = [ & ]( const ExtensionalOperator& got, const ExtensionalOperator& want, const char* what ) {
            if ( auto p = first_difference( got, want ) ) {
                out.identities = false;
                out.failures.push_back( std::string( what ) + " differs at " + hex( *p ) );
            }
        };
        identity( levi( harper( star ) ), star, "levi(harper(*))" );
        identity( harper( levi( div ) ), div, "harper(levi(-))" );
        identity( harper( star ), div, "harper(*)" );
    } );

    GroveReport report;
    report.systems = systems.size();
    for ( std::size_t i = 0; i < systems.size(); ++i ) {
        const auto& o = outcomes[ i ];
        report.revision_failures += o.revision ? 0 : 1;
        report.contraction_failures += o.contraction ? 0 : 1;
        report.levi_harper_failures += o.identities ? 0 : 1;
        if ( !o.failures.empty() )
            report.failing.push_back( { io::write_system( systems[ i ] ), o.failures } );
    }
    return report;
}

// ---------------------------------------------------------------------------
// Mutation testing

namespace {

std::optional< World > lowest_world( PropCode c, std::size_t n )
{
    for ( World w = 0; w < n; ++w )
        if ( ( c >> w ) & 1u )
            return w;
    return std::nullopt;
}

PropCode bit( World w ) { return PropCode{ 1 } << w; }

Mutant not_applicable( std::string name, std::string description, const ExtensionalOperator& base )
{
    return { std::move( name ), std::move( description ), false, base, {} };
}

} // namespace

std::vector< Mutant > mutant_catalog( const TwoLevelSystem& base )
{
    const auto o = table_of( base );
    const auto n = o.world_count();
    const auto size = static_cast< PropCode >( o.size() );
    const auto k = o.k_code();
    const auto m = o.universe_code();

    std::vector< Mutant > out;
    out.push_back( { "identity", "unchanged table (control)", true, o, {} } );

    // The first nonempty proposition left unchanged gets accepted, plus the
    // most plausible world outside K.
    {
        std::string desc = "a non-credible entry answers A plus the nearest world outside K";
        std::optional< World > nearest;
        for ( World w = 0; w < n; ++w ) {
            const auto& r = base.rank( w );
            if ( r && *r > 0 && ( !nearest || *r < *base.rank( *nearest ) ) )
                nearest = w;
        }
        std::optional< PropCode > target;
        for ( PropCode p = 1; p < size && !target; ++p )
            if ( two_level_outcome( base, o.proposition( p ) ).which == RevisionCase::unchanged )
                target = p;
        if ( nearest && target )
            out.push_back( { "accept-non-credible", desc, true, o.with_entry( *target, *target | bit( *nearest ) ), {} } );
        else
            out.push_back( not_applicable( "accept-non-credible", desc, o ) );
    }

    // The first contract-negation entry loses its K worlds.
    {
        std::string desc = "a contract-negation entry drops the worlds of K";
        std::optional< PropCode > target;
        for ( PropCode p = 1; p < size && !target; ++p )
            if ( two_level_outcome( base, o.proposition( p ) ).which == RevisionCase::contract_negation )
                target = p;
        if ( target )
            out.push_back( { "drop-center-in-contraction", desc, true, o.with_entry( *target, o[ *target ] & ~k ), {} } );
        else
            out.push_back( not_applicable( "drop-center-in-contraction", desc, o ) );
    }

    // Same table, but double negations are answered with K.
    {
        std::string desc = "the sentence probe answers K for double negations";
        bool visible = false;
        for ( PropCode p = 0; p < size; ++p )
            visible = visible || o[ p ] != k;
        SentenceProbe probe = [ o ]( const Formula& f ) {
            if ( f.kind() == Connective::negation && f.lhs().kind() == Connective::negation )
                return o.k();
            return o.apply( f );
        };
        if ( visible )
            out.push_back( { "break-extensionality", desc, true, o, std::move( probe ) } );
        else
            out.push_back( not_applicable( "break-extensionality", desc, o ) );
    }

    // An accepted entry re-admits a world of a rejected proposition.
    {
        std::string desc = "an accepted entry gains a world of a proposition whose negation is kept";
        std::optional< PropCode > rejected;
        std::optional< PropCode > accepted;
        for ( PropCode p = 1; p < size; ++p ) {
            if ( !rejected && ( o[ p ] & p ) == 0 )
                rejected = p;
            if ( !accepted && ( o[ p ] & ~p ) == 0 && o[ p ] != 0 )
                accepted = p;
        }
        if ( rejected && accepted )
            out.push_back( { "break-n-persistence", desc, true,
                             o.with_entry( *accepted, o[ *accepted ] | bit( *lowest_world( *rejected, n ) ) ), {} } );
        else
            out.push_back( not_applicable( "break-n-persistence", desc, o ) );
    }

    // The tautology's entry loses a world of K, so it no longer contains K+a.
    out.push_back( { "break-inclusion", "the entry for the tautology drops a world of K", true,
                     o.with_entry( m, k & ~bit( *lowest_world( k, n ) ) ), {} } );

    // An entry for a consequence of K gains a world outside A.
    {
        std::string desc = "an entry for a consequence of K gains a stray world outside A";
        std::optional< PropCode > target;
        for ( PropCode p = 1; p < m && !target; ++p )
            if ( ( k & ~p ) == 0 )
                target = p;
        if ( target )
            out.push_back( { "stray-world", desc, true,
                             o.with_entry( *target, o[ *target ] | bit( *lowest_world( m & ~*target, n ) ) ), {} } );
        else
            out.push_back( not_applicable( "stray-world", desc, o ) );
    }

    // The tautology's entry gains a world outside K; the pair A = M-{w},
    // B = K|{w} then has an overlap that the disjunction does not keep.
    {
        std::string desc = "the entry for the tautology gains a world outside K";
        const auto outside = m & ~k;
        if ( std::popcount( outside ) >= 2 )
            out.push_back( { "break-disjunctive-overlap", desc, true,
                             o.with_entry( m, k | bit( *lowest_world( outside, n ) ) ), {} } );
        else
            out.push_back( not_applicable( "break-disjunctive-overlap", desc, o ) );
    }
    return out;
}

bool MutationReport::pass() const
{
    for ( const auto& r : results ) {
        if ( r.name == "identity" ) {
            if ( !r.failures.empty() )
                return false;
        } else if ( r.applicable && ( r.failures.empty() || !r.witnesses_replay ) ) {
            return false;
        }
    }
    return true;
}

MutationReport run_mutation_tests( const TwoLevelSystem& base )
{
    MutationReport report;
    for ( auto& mutant : mutant_catalog( base ) ) {
        MutantResult result{ mutant.name, mutant.description, mutant.applicable, {}, true };
        if ( mutant.applicable ) {
            CheckContext ctx{ std::nullopt, mutant.probe };
            for ( auto id : two_level_postulates() ) {
                auto verdict = check( id, mutant.table, ctx );
                if ( verdict.pass )
                    continue;
                const auto& w = *verdict.witness;
                auto replay = violation_at( id, mutant.table, ctx, w.alpha, w.beta.value_or( 0 ) );
                if ( !replay || *replay != w.sides )
                    result.witnesses_replay = false;
                result.failures.emplace_back( id, w );
            }
        }
        report.results.push_back( std::move( result ) );
    }
    return report;
}

std::string to_text( const MutationReport& r, const Signature& sig )
{
    const auto n = sig.world_count();
    std::ostringstream out;
    for ( const auto& m : r.results ) {
        out << m.name << ": ";
        if ( !m.applicable ) {
            out << "not applicable\n";
            continue;
        }
        const bool control = m.name == "identity";
        const bool caught = !m.failures.empty();
        out << ( control ? ( caught ? "FAIL" : "PASS" ) : ( caught && m.witnesses_replay ? "CAUGHT" : "MISSED" ) )
            << " (" << m.failures.size() << " failing postulates)\n";
        for ( const auto& [ id, w ] : m.failures ) {
            out << "  " << info( id ).name << "  " << to_string( w ) << "  A=" << world_list( Proposition::from_code( n, w.alpha ), sig );
            if ( w.beta )
                out << " B=" << world_list( Proposition::from_code( n, *w.beta ), sig );
            out << "\n";
        }
    }
    out << "result: " << ( r.pass() ? "PASS" : "FAIL" ) << "\n";
    return out.str();
}

} // namespace srev
