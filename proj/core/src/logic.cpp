#include "srev/logic.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <unordered_set>

namespace srev {

namespace {

bool valid_atom_name( std::string_view name )
{
    if ( name.empty() || name == "true" || name == "false" )
        return false;
    auto head = static_cast< unsigned char >( name.front() );
    if ( !( std::isalpha( head ) || head == '_' ) )
        return false;
    return std::all_of( name.begin() + 1, name.end(), []( char c ) {
        auto u = static_cast< unsigned char >( c );
        return std::isalnum( u ) || u == '_';
    } );
}

constexpr std::size_t word_bits = 64;

std::size_t word_count_for( std::size_t worlds ) { return ( worlds + word_bits - 1 ) / word_bits; }

int hex_value( char c )
{
    if ( c >= '0' && c <= '9' )
        return c - '0';
    if ( c >= 'a' && c <= 'f' )
        return c - 'a' + 10;
    if ( c >= 'A' && c <= 'F' )
        return c - 'A' + 10;
    return -1;
}

} // namespace

// ---------------------------------------------------------------------------
// Signature

Signature::Signature( std::vector< std::string > atoms ) : atoms_{ std::move( atoms ) }
{
    if ( atoms_.empty() )
        throw SignatureError( "signature must declare at least one atom" );
    if ( atoms_.size() > max_atoms )
        throw SignatureError( "signature declares " + std::to_string( atoms_.size() ) + " atoms; the cap is "
                              + std::to_string( max_atoms ) );
    std::unordered_set< std::string > seen;
    for ( const auto& name : atoms_ ) {
        if ( !valid_atom_name( name ) )
            throw SignatureError( "invalid atom name '" + name + "'" );
        if ( !seen.insert( name ).second )
            throw SignatureError( "duplicate atom '" + name + "'" );
    }
}

std::optional< std::size_t > Signature::index_of( std::string_view name ) const
{
    auto it = std::find( atoms_.begin(), atoms_.end(), name );
    if ( it == atoms_.end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - atoms_.begin() );
}

std::string Signature::world_label( World w ) const
{
    std::string label( atoms_.size(), '0' );
    for ( std::size_t i = 0; i < atoms_.size(); ++i )
        if ( holds( w, i ) )
            label[ i ] = '1';
    return label;
}

std::optional< World > Signature::parse_world_label( std::string_view label ) const
{
    if ( label.size() != atoms_.size() )
        return std::nullopt;
    World w = 0;
    for ( char c : label ) {
        if ( c != '0' && c != '1' )
            return std::nullopt;
        w = ( w << 1 ) | static_cast< World >( c == '1' );
    }
    return w;
}

// ---------------------------------------------------------------------------
// Proposition

Proposition::Proposition( std::size_t world_count )
    : world_count_{ world_count }, words_( word_count_for( world_count ), 0 )
{
}

Proposition Proposition::universe( std::size_t world_count )
{
    Proposition p( world_count );
    std::fill( p.words_.begin(), p.words_.end(), ~std::uint64_t{ 0 } );
    p.clear_padding();
    return p;
}

Proposition Proposition::from_code( std::size_t world_count, std::uint64_t code )
{
    if ( world_count > word_bits )
        throw std::invalid_argument( "from_code needs at most 64 worlds" );
    Proposition p( world_count );
    if ( world_count < word_bits && ( code >> world_count ) != 0 )
        throw std::invalid_argument( "bitmask has bits outside the universe" );
    if ( !p.words_.empty() )
        p.words_[ 0 ] = code;
    return p;
}

Proposition Proposition::from_worlds( std::size_t world_count, std::initializer_list< World > worlds )
{
    return from_worlds( world_count, std::span< const World >( worlds.begin(), worlds.size() ) );
}

Proposition Proposition::from_worlds( std::size_t world_count, std::span< const World > worlds )
{
    Proposition p( world_count );
    for ( World w : worlds )
        p.insert( w );
    return p;
}

Proposition Proposition::from_hex( std::size_t world_count, std::string_view hex )
{
    if ( hex.starts_with( "0x" ) || hex.starts_with( "0X" ) )
        hex.remove_prefix( 2 );
    if ( hex.empty() )
        throw std::invalid_argument( "empty hex bitmask" );
    Proposition p( world_count );
    std::size_t bit = 0;
    for ( auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4 ) {
        int v = hex_value( *it );
        if ( v < 0 )
            throw std::invalid_argument( "invalid hex digit '" + std::string( 1, *it ) + "'" );
        for ( int k = 0; k < 4; ++k ) {
            if ( ( ( v >> k ) & 1 ) == 0 )
                continue;
            if ( bit + k >= world_count )
                throw std::invalid_argument( "bitmask 0x" + std::string( hex ) + " has bits outside the universe" );
            p.insert( static_cast< World >( bit + k ) );
        }
    }
    return p;
}

bool Proposition::contains( World w ) const noexcept
{
    if ( w >= world_count_ )
        return false;
    return ( ( words_[ w / word_bits ] >> ( w % word_bits ) ) & 1u ) != 0;
}

void Proposition::insert( World w )
{
    if ( w >= world_count_ )
        throw std::out_of_range( "world " + std::to_string( w ) + " outside the universe" );
    words_[ w / word_bits ] |= std::uint64_t{ 1 } << ( w % word_bits );
}

void Proposition::erase( World w )
{
    if ( w >= world_count_ )
        return;
    words_[ w / word_bits ] &= ~( std::uint64_t{ 1 } << ( w % word_bits ) );
}

bool Proposition::empty() const noexcept
{
    return std::all_of( words_.begin(), words_.end(), []( std::uint64_t x ) { return x == 0; } );
}

bool Proposition::full() const noexcept { return count() == world_count_; }

std::size_t Proposition::count() const noexcept
{
    std::size_t n = 0;
    for ( auto x : words_ )
        n += static_cast< std::size_t >( std::popcount( x ) );
    return n;
}

bool Proposition::subset_of( const Proposition& other ) const noexcept
{
    assert( world_count_ == other.world_count_ );
    for ( std::size_t i = 0; i < words_.size(); ++i )
        if ( ( words_[ i ] & ~other.words_[ i ] ) != 0 )
            return false;
    return true;
}

bool Proposition::intersects( const Proposition& other ) const noexcept
{
    assert( world_count_ == other.world_count_ );
    for ( std::size_t i = 0; i < words_.size(); ++i )
        if ( ( words_[ i ] & other.words_[ i ] ) != 0 )
            return true;
    return false;
}

Proposition Proposition::complement() const
{
    Proposition p( *this );
    for ( auto& x : p.words_ )
        x = ~x;
    p.clear_padding();
    return p;
}

Proposition& Proposition::operator&=( const Proposition& other )
{
    check_universe( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
        words_[ i ] &= other.words_[ i ];
    return *this;
}

Proposition& Proposition::operator|=( const Proposition& other )
{
    check_universe( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
        words_[ i ] |= other.words_[ i ];
    return *this;
}

Proposition& Proposition::operator-=( const Proposition& other )
{
    check_universe( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
        words_[ i ] &= ~other.words_[ i ];
    return *this;
}

std::uint64_t Proposition::code() const
{
    if ( world_count_ > word_bits )
        throw std::logic_error( "code() needs at most 64 worlds" );
    return words_.empty() ? 0 : words_[ 0 ];
}

std::string Proposition::to_hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for ( std::size_t bit = 0; bit < world_count_; bit += 4 ) {
        unsigned nibble = 0;
        for ( std::size_t k = 0; k < 4 && bit + k < world_count_; ++k )
            if ( contains( static_cast< World >( bit + k ) ) )
                nibble |= 1u << k;
        out.push_back( digits[ nibble ] );
    }
    while ( out.size() > 1 && out.back() == '0' )
        out.pop_back();
    if ( out.empty() )
        out = "0";
    std::reverse( out.begin(), out.end() );
    return "0x" + out;
}

std::vector< World > Proposition::worlds() const
{
    std::vector< World > out;
    out.reserve( count() );
    for ( std::size_t i = 0; i < words_.size(); ++i ) {
        auto x = words_[ i ];
        while ( x != 0 ) {
            auto bit = static_cast< std::size_t >( std::countr_zero( x ) );
            out.push_back( static_cast< World >( i * word_bits + bit ) );
            x &= x - 1;
        }
    }
    return out;
}

void Proposition::check_universe( const Proposition& other ) const
{
    if ( world_count_ != other.world_count_ )
        throw std::invalid_argument( "propositions over different universes" );
}

void Proposition::clear_padding() noexcept
{
    auto tail = world_count_ % word_bits;
    if ( tail != 0 && !words_.empty() )
        words_.back() &= ( std::uint64_t{ 1 } << tail ) - 1;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node
{
    Connective kind;
    std::size_t atom = 0;
    Formula lhs;
    Formula rhs;

    Node( Connective k, std::size_t a ) : kind{ k }, atom{ a }, lhs{ nullptr }, rhs{ nullptr } {}
    Node( Connective k, Formula l, Formula r ) : kind{ k }, lhs{ std::move( l ) }, rhs{ std::move( r ) } {}
};

Formula::Formula() : Formula( top() ) {}

Formula Formula::atom( std::size_t index )
{
    return Formula( std::make_shared< const Node >( Connective::atom, index ) );
}

Formula Formula::top()
{
    static const auto node = std::make_shared< const Node >( Connective::top, 0 );
    return Formula( node );
}

Formula Formula::bottom()
{
    static const auto node = std::make_shared< const Node >( Connective::bottom, 0 );
    return Formula( node );
}

Formula Formula::make( Connective kind, Formula a, Formula b )
{
    return Formula( std::make_shared< const Node >( kind, std::move( a ), std::move( b ) ) );
}

Connective Formula::kind() const noexcept { return node_->kind; }

std::size_t Formula::atom_index() const
{
    if ( node_->kind != Connective::atom )
        throw std::logic_error( "atom_index() on a non-atom formula" );
    return node_->atom;
}

const Formula& Formula::lhs() const
{
    if ( !node_->lhs.node_ )
        throw std::logic_error( "lhs() on a formula without operands" );
    return node_->lhs;
}

const Formula& Formula::rhs() const
{
    if ( !node_->rhs.node_ )
        throw std::logic_error( "rhs() on a formula without a right operand" );
    return node_->rhs;
}

bool Formula::is_binary() const noexcept
{
    switch ( node_->kind ) {
    case Connective::conjunction:
    case Connective::disjunction:
    case Connective::implication:
    case Connective::equivalence:
        return true;
    default:
        return false;
    }
}

bool operator==( const Formula& a, const Formula& b )
{
    if ( a.node_ == b.node_ )
        return true;
    if ( a.kind() != b.kind() )
        return false;
    switch ( a.kind() ) {
    case Connective::atom:
        return a.node_->atom == b.node_->atom;
    case Connective::top:
    case Connective::bottom:
        return true;
    case Connective::negation:
        return a.lhs() == b.lhs();
    default:
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

Formula negation( Formula f ) { return Formula::make( Connective::negation, std::move( f ), Formula( nullptr ) ); }
Formula conjunction( Formula a, Formula b ) { return Formula::make( Connective::conjunction, std::move( a ), std::move( b ) ); }
Formula disjunction( Formula a, Formula b ) { return Formula::make( Connective::disjunction, std::move( a ), std::move( b ) ); }
Formula implication( Formula a, Formula b ) { return Formula::make( Connective::implication, std::move( a ), std::move( b ) ); }
Formula equivalence( Formula a, Formula b ) { return Formula::make( Connective::equivalence, std::move( a ), std::move( b ) ); }

// ---------------------------------------------------------------------------
// Semantics

namespace {

Proposition atom_models( std::size_t index, const Signature& sig )
{
    Proposition p( sig.world_count() );
    for ( World w = 0; w < sig.world_count(); ++w )
        if ( sig.holds( w, index ) )
            p.insert( w );
    return p;
}

} // namespace

Proposition models( const Formula& f, const Signature& sig )
{
    const auto n = sig.world_count();
    switch ( f.kind() ) {
    case Connective::atom:
        if ( f.atom_index() >= sig.size() )
            throw SignatureError( "formula mentions atom #" + std::to_string( f.atom_index() )
                                  + " outside the signature" );
        return atom_models( f.atom_index(), sig );
    case Connective::top:
        return Proposition::universe( n );
    case Connective::bottom:
        return Proposition( n );
    case Connective::negation:
        return models( f.lhs(), sig ).complement();
    case Connective::conjunction:
        return models( f.lhs(), sig ) & models( f.rhs(), sig );
    case Connective::disjunction:
        return models( f.lhs(), sig ) | models( f.rhs(), sig );
    case Connective::implication:
        return models( f.lhs(), sig ).complement() | models( f.rhs(), sig );
    case Connective::equivalence: {
        auto a = models( f.lhs(), sig );
        auto b = models( f.rhs(), sig );
        return ( a & b ) | ( a.complement() & b.complement() );
    }
    }
    throw std::logic_error( "unknown connective" );
}

bool theory_entails( const Proposition& k, const Formula& f, const Signature& sig )
{
    return k.subset_of( models( f, sig ) );
}

Proposition expand( const Proposition& k, const Formula& f, const Signature& sig ) { return k & models( f, sig ); }

Formula canonical_formula( const Proposition& p, const Signature& sig )
{
    if ( p.empty() )
        return Formula::bottom();
    if ( p.full() )
        return Formula::top();
    std::optional< Formula > dnf;
    for ( World w : p.worlds() ) {
        std::optional< Formula > minterm;
        for ( std::size_t i = 0; i < sig.size(); ++i ) {
            auto literal = sig.holds( w, i ) ? Formula::atom( i ) : negation( Formula::atom( i ) );
            minterm = minterm ? conjunction( std::move( *minterm ), std::move( literal ) ) : std::move( literal );
        }
        dnf = dnf ? disjunction( std::move( *dnf ), std::move( *minterm ) ) : std::move( *minterm );
    }
    return *dnf;
}

namespace {

std::string_view symbol( Connective c )
{
    switch ( c ) {
    case Connective::conjunction:
        return "&";
    case Connective::disjunction:
        return "|";
    case Connective::implication:
        return "->";
    case Connective::equivalence:
        return "<->";
    default:
        return "";
    }
}

void print( const Formula& f, const Signature& sig, std::string& out );

// Binary children are parenthesised, except a left child continuing the same
// associative chain (a&b&c parses left-nested).
void print_child( const Formula& parent, const Formula& child, bool left, const Signature& sig, std::string& out )
{
    bool chain = left && child.kind() == parent.kind()
                 && ( parent.kind() == Connective::conjunction || parent.kind() == Connective::disjunction
                      || parent.kind() == Connective::equivalence );
    bool wrap = child.is_binary() && !chain;
    if ( wrap )
        out.push_back( '(' );
    print( child, sig, out );
    if ( wrap )
        out.push_back( ')' );
}

void print( const Formula& f, const Signature& sig, std::string& out )
{
    switch ( f.kind() ) {
    case Connective::atom:
        out += sig.atom( f.atom_index() );
        return;
    case Connective::top:
        out += "true";
        return;
    case Connective::bottom:
        out += "false";
        return;
    case Connective::negation:
        out.push_back( '~' );
        print_child( f, f.lhs(), false, sig, out );
        return;
    default:
        print_child( f, f.lhs(), true, sig, out );
        out += symbol( f.kind() );
        print_child( f, f.rhs(), false, sig, out );
        return;
    }
}

} // namespace

std::string to_string( const Formula& f, const Signature& sig )
{
    std::string out;
    print( f, sig, out );
    return out;
}

std::string world_list( const Proposition& p, const Signature& sig )
{
    std::string out = "{";
    bool first = true;
    for ( World w : p.worlds() ) {
        if ( !first )
            out.push_back( ',' );
        first = false;
        out += sig.world_label( w );
    }
    out.push_back( '}' );
    return out;
}

} // namespace srev
