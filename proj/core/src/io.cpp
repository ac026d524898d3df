#include "srev/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace srev::io {

using json = nlohmann::ordered_json;

namespace {

json parse_json( std::string_view text )
{
    try {
        return json::parse( text );
    } catch ( const json::parse_error& e ) {
        throw FormatError( std::string( "invalid JSON: " ) + e.what() );
    }
}

void reject_unknown_keys( const json& doc, std::initializer_list< std::string_view > allowed )
{
    for ( const auto& [ key, _ ] : doc.items() ) {
        if ( std::find( allowed.begin(), allowed.end(), key ) == allowed.end() )
            throw FormatError( "unknown key '" + key + "'" );
    }
}

Signature parse_atoms( const json& doc )
{
    if ( !doc.is_object() )
        throw FormatError( "top level must be a JSON object" );
    if ( !doc.contains( "atoms" ) || !doc[ "atoms" ].is_array() )
        throw FormatError( "\"atoms\" must be an array of names" );
    std::vector< std::string > atoms;
    for ( const auto& a : doc[ "atoms" ] ) {
        if ( !a.is_string() )
            throw FormatError( "atom names must be strings" );
        atoms.push_back( a.get< std::string >() );
    }
    try {
        return Signature( std::move( atoms ) );
    } catch ( const SignatureError& e ) {
        throw FormatError( e.what() );
    }
}

std::uint32_t parse_natural( const json& v, const std::string& what )
{
    if ( !v.is_number_integer() || v.get< std::int64_t >() < 0
         || v.get< std::int64_t >() > std::numeric_limits< std::uint32_t >::max() )
        throw FormatError( what + " must be a non-negative integer" );
    return static_cast< std::uint32_t >( v.get< std::int64_t >() );
}

json atoms_json( const Signature& sig )
{
    json atoms = json::array();
    for ( const auto& a : sig.atoms() )
        atoms.push_back( a );
    return atoms;
}

} // namespace

// ---------------------------------------------------------------------------
// Systems

bool SystemFile::has_implausible() const
{
    return std::any_of( ranks.begin(), ranks.end(), []( const Rank& r ) { return !r; } );
}

SphereSystem SystemFile::full() const
{
    std::vector< std::uint32_t > total;
    for ( World w = 0; w < ranks.size(); ++w ) {
        if ( !ranks[ w ] )
            throw FormatError( "world " + sig.world_label( w ) + " is implausible; a full system ranks every world" );
        total.push_back( *ranks[ w ] );
    }
    try {
        return SphereSystem( sig, std::move( total ) );
    } catch ( const SystemError& e ) {
        throw FormatError( e.what() );
    }
}

TwoLevelSystem SystemFile::two_level() const
{
    if ( cutoff )
        return TwoLevelSystem( sig, ranks, *cutoff );
    std::uint32_t top = 0;
    for ( const auto& r : ranks )
        if ( r )
            top = std::max( top, *r );
    return TwoLevelSystem( sig, ranks, top );
}

SystemFile parse_system( std::string_view json_text )
{
    auto doc = parse_json( json_text );
    auto sig = parse_atoms( doc );
    reject_unknown_keys( doc, { "atoms", "ranks", "cutoff" } );

    if ( !doc.contains( "ranks" ) || !doc[ "ranks" ].is_object() )
        throw FormatError( "\"ranks\" must be an object keyed by world bitstrings" );
    std::vector< Rank > ranks( sig.world_count() );
    for ( const auto& [ key, value ] : doc[ "ranks" ].items() ) {
        auto w = sig.parse_world_label( key );
        if ( !w )
            throw FormatError( "bad world key '" + key + "': expected " + std::to_string( sig.size() )
                               + " characters of 0/1" );
        if ( value.is_null() )
            continue;
        ranks[ *w ] = parse_natural( value, "rank of world " + key );
    }

    std::optional< std::uint32_t > cutoff;
    if ( doc.contains( "cutoff" ) )
        cutoff = parse_natural( doc[ "cutoff" ], "\"cutoff\"" );

    if ( std::none_of( ranks.begin(), ranks.end(), []( const Rank& r ) { return r == 0u; } ) )
        throw FormatError( "no world has rank 0" );
    SystemFile file{ std::move( sig ), std::move( ranks ), cutoff };
    if ( !cutoff && file.has_implausible() )
        (void)file.full(); // throws with the offending world
    return file;
}

SystemFile read_system_file( const std::filesystem::path& path ) { return parse_system( read_text_file( path ) ); }

namespace {

json ranks_json( const Signature& sig, const auto& rank_of )
{
    json ranks = json::object();
    for ( World w = static_cast< World >( sig.world_count() ); w-- > 0; ) {
        Rank r = rank_of( w );
        ranks[ sig.world_label( w ) ] = r ? json( *r ) : json( nullptr );
    }
    return ranks;
}

} // namespace

std::string write_system( const TwoLevelSystem& t )
{
    json doc;
    doc[ "atoms" ] = atoms_json( t.sig() );
    doc[ "ranks" ] = ranks_json( t.sig(), [ & ]( World w ) { return t.rank( w ); } );
    doc[ "cutoff" ] = t.cutoff();
    return doc.dump();
}

std::string write_system( const SphereSystem& g )
{
    json doc;
    doc[ "atoms" ] = atoms_json( g.sig() );
    doc[ "ranks" ] = ranks_json( g.sig(), [ & ]( World w ) { return Rank{ g.rank( w ) }; } );
    return doc.dump();
}

// ---------------------------------------------------------------------------
// Tables

Proposition parse_k( std::string_view text, const Signature& sig )
{
    if ( text.starts_with( "0x" ) || text.starts_with( "0X" ) ) {
        try {
            return Proposition::from_hex( sig.world_count(), text );
        } catch ( const std::invalid_argument& e ) {
            throw FormatError( std::string( "bad K bitmask: " ) + e.what() );
        }
    }
    try {
        return models( parse_formula( text, sig ), sig );
    } catch ( const ParseError& e ) {
        throw FormatError( std::string( "bad K formula: " ) + e.what() );
    }
}

ExtensionalOperator parse_table( std::string_view json_text )
{
    auto doc = parse_json( json_text );
    auto sig = parse_atoms( doc );
    reject_unknown_keys( doc, { "atoms", "K", "entries" } );
    if ( sig.size() > max_table_atoms )
        throw FormatError( "operator tables support at most " + std::to_string( max_table_atoms ) + " atoms" );

    if ( !doc.contains( "K" ) || !doc[ "K" ].is_string() )
        throw FormatError( "\"K\" must be a string (0x bitmask or formula)" );
    auto k = parse_k( doc[ "K" ].get< std::string >(), sig );

    if ( !doc.contains( "entries" ) || !doc[ "entries" ].is_object() )
        throw FormatError( "\"entries\" must be an object of hex bitmasks" );
    const auto n = sig.world_count();
    const auto size = std::size_t{ 1 } << n;
    std::vector< PropCode > table( size );
    std::vector< bool > seen( size, false );
    for ( const auto& [ key, value ] : doc[ "entries" ].items() ) {
        if ( !value.is_string() )
            throw FormatError( "entry '" + key + "' must be a hex string" );
        PropCode in = 0;
        PropCode out = 0;
        try {
            in = static_cast< PropCode >( Proposition::from_hex( n, key ).code() );
            out = static_cast< PropCode >( Proposition::from_hex( n, value.get< std::string >() ).code() );
        } catch ( const std::invalid_argument& e ) {
            throw FormatError( "entry '" + key + "': " + e.what() );
        }
        if ( seen[ in ] )
            throw FormatError( "duplicate entry for proposition " + key );
        seen[ in ] = true;
        table[ in ] = out;
    }
    for ( std::size_t p = 0; p < size; ++p )
        if ( !seen[ p ] )
            throw FormatError( "missing entry for proposition "
                               + Proposition::from_code( n, p ).to_hex() + " (tables are total)" );
    return ExtensionalOperator( std::move( sig ), std::move( k ), std::move( table ) );
}

ExtensionalOperator read_table_file( const std::filesystem::path& path ) { return parse_table( read_text_file( path ) ); }

std::string write_table( const ExtensionalOperator& op )
{
    json doc;
    doc[ "atoms" ] = atoms_json( op.sig() );
    doc[ "K" ] = op.k().to_hex();
    json entries = json::object();
    for ( PropCode p = 0; p < op.size(); ++p )
        entries[ op.proposition( p ).to_hex() ] = op.proposition( op[ p ] ).to_hex();
    doc[ "entries" ] = std::move( entries );
    return doc.dump();
}

std::string read_text_file( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw FormatError( "cannot open '" + path.string() + "'" );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace srev::io
