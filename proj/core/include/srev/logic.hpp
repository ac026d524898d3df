#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srev {

inline constexpr std::size_t max_atoms = 16;

// A world is a truth assignment encoded as an index in [0, 2^n). The first
// declared atom is the most significant bit, so for atoms [p, q] world 3 is
// pq, 2 is p~q, 1 is ~pq and 0 is ~p~q.
using World = std::uint32_t;

class SignatureError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered, duplicate-free list of atom names. The order fixes world indexing.
class Signature
{
public:
    explicit Signature( std::vector< std::string > atoms );

    [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
    [[nodiscard]] const std::vector< std::string >& atoms() const noexcept { return atoms_; }
    [[nodiscard]] const std::string& atom( std::size_t index ) const { return atoms_.at( index ); }
    [[nodiscard]] std::optional< std::size_t > index_of( std::string_view name ) const;

    [[nodiscard]] std::size_t world_count() const noexcept { return std::size_t{ 1 } << atoms_.size(); }

    // Truth value of atom `index` in world `w`.
    [[nodiscard]] bool holds( World w, std::size_t index ) const noexcept
    {
        return ( ( w >> ( atoms_.size() - 1 - index ) ) & 1u ) != 0;
    }

    // Bitstring in declared atom order, '1' = true ("10" is p~q for [p, q]).
    [[nodiscard]] std::string world_label( World w ) const;
    [[nodiscard]] std::optional< World > parse_world_label( std::string_view label ) const;

    friend bool operator==( const Signature&, const Signature& ) = default;

private:
    std::vector< std::string > atoms_;
};

/// A set of worlds over a fixed universe of `world_count` worlds. Doubles as
/// the extensional form of a belief set: the empty proposition is the
/// inconsistent theory.
class Proposition
{
public:
    Proposition() = default;
    explicit Proposition( std::size_t world_count );

    static Proposition universe( std::size_t world_count );
    static Proposition from_code( std::size_t world_count, std::uint64_t code );
    static Proposition from_worlds( std::size_t world_count, std::initializer_list< World > worlds );
    static Proposition from_worlds( std::size_t world_count, std::span< const World > worlds );
    // Accepts an optional 0x prefix. Throws std::invalid_argument on bad digits
    // or bits outside the universe.
    static Proposition from_hex( std::size_t world_count, std::string_view hex );

    [[nodiscard]] std::size_t world_count() const noexcept { return world_count_; }
    [[nodiscard]] bool contains( World w ) const noexcept;
    void insert( World w );
    void erase( World w );

    [[nodiscard]] bool empty() const noexcept;
    [[nodiscard]] bool full() const noexcept;
    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] bool subset_of( const Proposition& other ) const noexcept;
    [[nodiscard]] bool intersects( const Proposition& other ) const noexcept;
    [[nodiscard]] Proposition complement() const;

    Proposition& operator&=( const Proposition& other );
    Proposition& operator|=( const Proposition& other );
    Proposition& operator-=( const Proposition& other );

    friend Proposition operator&( Proposition lhs, const Proposition& rhs ) { return lhs &= rhs; }
    friend Proposition operator|( Proposition lhs, const Proposition& rhs ) { return lhs |= rhs; }
    friend Proposition operator-( Proposition lhs, const Proposition& rhs ) { return lhs -= rhs; }
    friend bool operator==( const Proposition&, const Proposition& ) = default;

    // Bitmask with bit w set iff world w is a member. Requires world_count <= 64.
    [[nodiscard]] std::uint64_t code() const;
    // Lowercase hex of the bitmask with a 0x prefix, no leading zeros.
    [[nodiscard]] std::string to_hex() const;
    [[nodiscard]] std::vector< World > worlds() const;

private:
    void check_universe( const Proposition& other ) const;
    void clear_padding() noexcept;

    std::size_t world_count_ = 0;
    std::vector< std::uint64_t > words_;
};

enum class Connective
{
    atom,
    top,
    bottom,
    negation,
    conjunction,
    disjunction,
    implication,
    equivalence,
};

/// Immutable propositional formula. Atoms are signature indices; names only
/// matter at parse and print time.
class Formula
{
public:
    Formula(); // top

    static Formula atom( std::size_t index );
    static Formula top();
    static Formula bottom();

    [[nodiscard]] Connective kind() const noexcept;
    [[nodiscard]] std::size_t atom_index() const;
    // Operand of a negation, or left operand of a binary connective.
    [[nodiscard]] const Formula& lhs() const;
    [[nodiscard]] const Formula& rhs() const;
    [[nodiscard]] bool is_binary() const noexcept;

    friend bool operator==( const Formula& a, const Formula& b );

    friend Formula negation( Formula f );
    friend Formula conjunction( Formula a, Formula b );
    friend Formula disjunction( Formula a, Formula b );
    friend Formula implication( Formula a, Formula b );
    friend Formula equivalence( Formula a, Formula b );

private:
    struct Node;
    explicit Formula( std::shared_ptr< const Node > node ) : node_{ std::move( node ) } {}
    static Formula make( Connective kind, Formula a, Formula b );

    std::shared_ptr< const Node > node_;
};

Formula negation( Formula f );
Formula conjunction( Formula a, Formula b );
Formula disjunction( Formula a, Formula b );
Formula implication( Formula a, Formula b );
Formula equivalence( Formula a, Formula b );

class ParseError : public std::runtime_error
{
public:
    enum class Kind
    {
        syntax,
        undeclared_atom,
    };

    ParseError( Kind kind, std::size_t offset, const std::string& what );

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    // Byte offset into the input.
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

// Grammar, loosest to tightest: <->, -> (right-assoc), |, &, ~. Unicode
// connectives are accepted as aliases.
Formula parse_formula( std::string_view text, const Signature& sig );

// Throws SignatureError if the formula mentions an atom outside `sig`.
Proposition models( const Formula& f, const Signature& sig );

// K entails f iff every K-world satisfies f. The empty K entails everything.
bool theory_entails( const Proposition& k, const Formula& f, const Signature& sig );

Proposition expand( const Proposition& k, const Formula& f, const Signature& sig );

// Full DNF: one complete minterm per world, in increasing world order.
Formula canonical_formula( const Proposition& p, const Signature& sig );

std::string to_string( const Formula& f, const Signature& sig );

// "{01,11}" style listing in increasing world order.
std::string world_list( const Proposition& p, const Signature& sig );

} // namespace srev
