// Copyright 2026 The qimg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*!
  \file cube.hpp
  \brief Product terms over a three-valued alphabet and XOR covers built from them
*/

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qimg
{

/*! \brief Symbol of one variable inside a product term: zero, don't-care or one. */
enum class trit : uint8_t
{
  zero = 0,
  dc = 1,
  one = 2
};

inline char to_char( trit t )
{
  switch ( t )
  {
  case trit::zero:
    return '0';
  case trit::dc:
    return '-';
  default:
    return '1';
  }
}

inline trit trit_from_char( char c )
{
  switch ( c )
  {
  case '0':
    return trit::zero;
  case '-':
    return trit::dc;
  case '1':
    return trit::one;
  default:
    throw std::invalid_argument( std::string( "invalid cube symbol '" ) + c + "'" );
  }
}

/*! \brief A product term over position variables.
 *
 * Each variable carries one of the symbols {0, -, 1}.  Symbol index 0 is the
 * first (root-level) variable.  Storage is two bits per variable packed
 * wordwise: `care_` holds a 1 for every non-don't-care variable and `value_`
 * the asserted polarity there, so matching an assignment is a single
 * mask-and-compare.  At most 64 variables are supported, which covers every
 * position register this library can meaningfully simulate or emit.
 */
class cube
{
public:
  static constexpr uint32_t max_vars = 64;

  cube() = default;

  /*! \brief All-don't-care cube over `num_vars` variables. */
  explicit cube( uint32_t num_vars )
      : n_( num_vars )
  {
    check_size( num_vars );
  }

  /*! \brief Parses a symbol string such as "0-1". */
  explicit cube( std::string_view symbols )
      : n_( static_cast<uint32_t>( symbols.size() ) )
  {
    check_size( n_ );
    for ( uint32_t i = 0; i < n_; ++i )
    {
      set( i, trit_from_char( symbols[i] ) );
    }
  }

  uint32_t num_vars() const { return n_; }

  trit at( uint32_t var ) const
  {
    if ( ( care_ >> var ) & 1u )
    {
      return ( ( value_ >> var ) & 1u ) ? trit::one : trit::zero;
    }
    return trit::dc;
  }

  void set( uint32_t var, trit t )
  {
    uint64_t const bit = uint64_t( 1 ) << var;
    switch ( t )
    {
    case trit::zero:
      care_ |= bit;
      value_ &= ~bit;
      break;
    case trit::dc:
      care_ &= ~bit;
      value_ &= ~bit;
      break;
    case trit::one:
      care_ |= bit;
      value_ |= bit;
      break;
    }
  }

  /*! \brief True iff every non-don't-care symbol equals the assignment bit.
   *
   * Bit i of `assignment` is the value of variable i.
   */
  bool matches( uint64_t assignment ) const
  {
    return ( ( assignment ^ value_ ) & care_ ) == 0;
  }

  /*! \brief Number of non-don't-care symbols (= controls when lowered to a gate). */
  uint32_t literal_count() const
  {
    return static_cast<uint32_t>( std::popcount( care_ ) );
  }

  /*! \brief Cube with symbols cyclically shifted one position left: c[1..] + c[0]. */
  cube rotated_left() const
  {
    if ( n_ <= 1 )
    {
      return *this;
    }
    cube r( n_ );
    uint64_t const top = uint64_t( 1 ) << ( n_ - 1 );
    r.value_ = ( value_ >> 1 ) | ( ( value_ & 1u ) ? top : 0 );
    r.care_ = ( care_ >> 1 ) | ( ( care_ & 1u ) ? top : 0 );
    return r;
  }

  std::string str() const
  {
    std::string s;
    s.reserve( n_ );
    for ( uint32_t i = 0; i < n_; ++i )
    {
      s.push_back( to_char( at( i ) ) );
    }
    return s;
  }

  bool operator==( cube const& other ) const = default;

  /*! \brief Lexicographic order with per-variable symbol rank 0 < - < 1.
   *
   * Depth-first traversal of a ternary tree emits cubes in exactly this order.
   */
  bool operator<( cube const& other ) const
  {
    uint32_t const n = n_ < other.n_ ? n_ : other.n_;
    for ( uint32_t i = 0; i < n; ++i )
    {
      auto const a = static_cast<uint8_t>( at( i ) );
      auto const b = static_cast<uint8_t>( other.at( i ) );
      if ( a != b )
      {
        return a < b;
      }
    }
    return n_ < other.n_;
  }

private:
  static void check_size( uint32_t num_vars )
  {
    if ( num_vars > max_vars )
    {
      throw std::invalid_argument( "cube supports at most 64 variables" );
    }
  }

  uint64_t value_ = 0; /* polarity bit per cared variable, 0 elsewhere */
  uint64_t care_ = 0;  /* 1 per non-don't-care variable */
  uint32_t n_ = 0;
};

/*! \brief An ordered collection of cubes with XOR-of-products semantics.
 *
 * The value at an assignment is the XOR over all cubes of whether the cube
 * matches.  No two cubes may be symbol-identical; a duplicated cube would
 * silently XOR-cancel, so construction paths treat duplicates as an error
 * rather than repairing them.
 */
struct esop_cover
{
  uint32_t num_vars = 0;
  std::vector<cube> cubes;

  esop_cover() = default;

  explicit esop_cover( uint32_t num_vars )
      : num_vars( num_vars )
  {
  }

  esop_cover( uint32_t num_vars, std::vector<cube> cubes )
      : num_vars( num_vars ), cubes( std::move( cubes ) )
  {
  }

  /*! \brief Builds a cover from symbol strings, e.g. `from_strings(2, {"00", "01"})`. */
  static esop_cover from_strings( uint32_t num_vars, std::initializer_list<std::string_view> strings )
  {
    esop_cover cover( num_vars );
    cover.cubes.reserve( strings.size() );
    for ( auto const& s : strings )
    {
      cube c{ s };
      if ( c.num_vars() != num_vars )
      {
        throw std::invalid_argument( "cube length does not match cover variable count" );
      }
      cover.cubes.push_back( c );
    }
    return cover;
  }

  size_t size() const { return cubes.size(); }
  bool empty() const { return cubes.empty(); }

  bool operator==( esop_cover const& other ) const = default;

  std::string str() const
  {
    std::string s;
    for ( size_t i = 0; i < cubes.size(); ++i )
    {
      if ( i > 0 )
      {
        s += ", ";
      }
      s += cubes[i].str();
    }
    return "{" + s + "}";
  }
};

} /* namespace qimg */
