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
  \file image.hpp
  \brief NEQR raster model and per-color-line minterm extraction

  An image is stored zero-padded to 2^h rows by 2^w columns with q bits per
  channel.  The position basis of a pixel (y, x) is the h bits of y (most
  significant first) followed by the w bits of x (most significant first),
  and color line index 0 is the most significant bitplane.
*/

#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube.hpp"

namespace qimg
{

/*! \brief Raised when a raster source cannot be read or decoded. */
struct io_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/*! \brief A 2^h x 2^w raster with q bits per channel, 1 or 3 channels. */
class neqr_image
{
public:
  /*! \brief Wraps raw pixel data; pads to the next power of two per side.
   *
   * `pixels` is row-major with channels interleaved; padded positions are
   * filled with zeros.
   */
  neqr_image( uint32_t rows, uint32_t cols, uint32_t channels, std::vector<uint8_t> pixels,
              uint32_t bits_per_channel = 8 )
      : source_rows_( rows ), source_cols_( cols ), channels_( channels ), q_( bits_per_channel )
  {
    if ( rows == 0 || cols == 0 )
    {
      throw io_error( "zero-sized image" );
    }
    if ( channels != 1 && channels != 3 )
    {
      throw io_error( "channel count must be 1 or 3" );
    }
    if ( q_ == 0 || q_ > 8 )
    {
      throw io_error( "unsupported bit depth" );
    }
    if ( pixels.size() != static_cast<size_t>( rows ) * cols * channels )
    {
      throw std::invalid_argument( "pixel buffer size does not match dimensions" );
    }
    h_ = ceil_log2( rows );
    w_ = ceil_log2( cols );
    uint32_t const padded_rows = 1u << h_;
    uint32_t const padded_cols = 1u << w_;
    pixels_.assign( static_cast<size_t>( padded_rows ) * padded_cols * channels, 0 );
    for ( uint32_t y = 0; y < rows; ++y )
    {
      for ( uint32_t x = 0; x < cols; ++x )
      {
        for ( uint32_t c = 0; c < channels; ++c )
        {
          pixels_[( static_cast<size_t>( y ) * padded_cols + x ) * channels + c] =
              pixels[( static_cast<size_t>( y ) * cols + x ) * channels + c];
        }
      }
    }
  }

  uint32_t h() const { return h_; }
  uint32_t w() const { return w_; }
  uint32_t num_position_vars() const { return h_ + w_; }
  uint32_t q() const { return q_; }
  uint32_t channels() const { return channels_; }
  uint32_t rows() const { return 1u << h_; }
  uint32_t cols() const { return 1u << w_; }
  uint32_t source_rows() const { return source_rows_; }
  uint32_t source_cols() const { return source_cols_; }
  uint64_t num_positions() const { return uint64_t( 1 ) << ( h_ + w_ ); }

  /*! \brief The classical lookup f(y, x) the prepared circuit must reproduce. */
  uint8_t value( uint32_t y, uint32_t x, uint32_t channel = 0 ) const
  {
    return pixels_[( static_cast<size_t>( y ) * cols() + x ) * channels_ + channel];
  }

  /*! \brief Value at a flat position index (y bits then x bits, MSB first). */
  uint8_t value_at_position( uint64_t position, uint32_t channel = 0 ) const
  {
    return pixels_[position * channels_ + channel];
  }

private:
  static uint32_t ceil_log2( uint32_t n )
  {
    uint32_t bits = 0;
    while ( ( 1u << bits ) < n )
    {
      ++bits;
    }
    return bits;
  }

  uint32_t source_rows_;
  uint32_t source_cols_;
  uint32_t channels_;
  uint32_t q_;
  uint32_t h_ = 0;
  uint32_t w_ = 0;
  std::vector<uint8_t> pixels_;
};

/*! \brief The minterm cover of one color line: channel, bitplane and cubes. */
struct color_line_cover
{
  uint32_t channel = 0;
  uint32_t bit = 0; /* 0 = most significant plane */
  esop_cover cover;
};

/*! \brief Extracts the minterms of positions whose value has bitplane `bit` set.
 *
 * Bit index 0 denotes the most significant plane.  Cubes are emitted in
 * row-major position order and carry no don't-care symbols.
 */
inline color_line_cover bitplane_cover( neqr_image const& img, uint32_t channel, uint32_t bit )
{
  if ( channel >= img.channels() || bit >= img.q() )
  {
    throw std::invalid_argument( "bitplane index out of range" );
  }
  uint32_t const n = img.num_position_vars();
  color_line_cover line{ channel, bit, esop_cover( n ) };
  uint32_t const shift = img.q() - 1 - bit;
  for ( uint64_t position = 0; position < img.num_positions(); ++position )
  {
    if ( ( img.value_at_position( position, channel ) >> shift ) & 1u )
    {
      cube minterm( n );
      for ( uint32_t v = 0; v < n; ++v )
      {
        bool const set = ( position >> ( n - 1 - v ) ) & 1u;
        minterm.set( v, set ? trit::one : trit::zero );
      }
      line.cover.cubes.push_back( minterm );
    }
  }
  return line;
}

namespace detail
{

inline int pnm_next_token( std::istream& in, std::string& tok )
{
  tok.clear();
  int ch = in.get();
  while ( ch != EOF )
  {
    if ( ch == '#' )
    {
      while ( ch != EOF && ch != '\n' )
      {
        ch = in.get();
      }
    }
    else if ( std::isspace( ch ) )
    {
      ch = in.get();
    }
    else
    {
      break;
    }
  }
  while ( ch != EOF && !std::isspace( ch ) && ch != '#' )
  {
    tok.push_back( static_cast<char>( ch ) );
    ch = in.get();
  }
  if ( ch == '#' )
  {
    in.unget();
  }
  return ch;
}

inline uint32_t pnm_read_number( std::istream& in, char const* what )
{
  std::string tok;
  pnm_next_token( in, tok );
  if ( tok.empty() )
  {
    throw io_error( std::string( "truncated header: missing " ) + what );
  }
  uint64_t value = 0;
  for ( char c : tok )
  {
    if ( c < '0' || c > '9' )
    {
      throw io_error( std::string( "bad " ) + what + " '" + tok + "'" );
    }
    value = value * 10 + static_cast<uint64_t>( c - '0' );
    if ( value > 0xffffffffull )
    {
      throw io_error( std::string( "bad " ) + what + " '" + tok + "'" );
    }
  }
  return static_cast<uint32_t>( value );
}

} /* namespace detail */

/*! \brief Decodes PGM (P2/P5) or PPM (P3/P6), 8-bit maxval.
 *
 * Dimensions that are not powers of two are zero-padded on the right and
 * bottom; h and w are derived from the padded size.
 */
inline neqr_image load_image( std::istream& in )
{
  std::string magic;
  detail::pnm_next_token( in, magic );
  bool binary;
  uint32_t channels;
  if ( magic == "P2" )
  {
    binary = false;
    channels = 1;
  }
  else if ( magic == "P5" )
  {
    binary = true;
    channels = 1;
  }
  else if ( magic == "P3" )
  {
    binary = false;
    channels = 3;
  }
  else if ( magic == "P6" )
  {
    binary = true;
    channels = 3;
  }
  else
  {
    throw io_error( "unsupported raster format (expected P2/P3/P5/P6), got '" + magic + "'" );
  }
  uint32_t const cols = detail::pnm_read_number( in, "width" );
  uint32_t const rows = detail::pnm_read_number( in, "height" );
  uint32_t const maxval = detail::pnm_read_number( in, "maxval" );
  if ( rows == 0 || cols == 0 )
  {
    throw io_error( "zero-sized image" );
  }
  if ( maxval == 0 || maxval > 255 )
  {
    throw io_error( "unsupported bit depth: maxval " + std::to_string( maxval ) );
  }
  size_t const count = static_cast<size_t>( rows ) * cols * channels;
  std::vector<uint8_t> pixels( count );
  if ( binary )
  {
    /* header ends after exactly one whitespace character, already consumed */
    in.read( reinterpret_cast<char*>( pixels.data() ), static_cast<std::streamsize>( count ) );
    if ( static_cast<size_t>( in.gcount() ) != count )
    {
      throw io_error( "truncated pixel data" );
    }
  }
  else
  {
    for ( size_t i = 0; i < count; ++i )
    {
      uint32_t const v = detail::pnm_read_number( in, "pixel" );
      if ( v > maxval )
      {
        throw io_error( "pixel value " + std::to_string( v ) + " exceeds maxval" );
      }
      pixels[i] = static_cast<uint8_t>( v );
    }
  }
  return neqr_image( rows, cols, channels, std::move( pixels ) );
}

inline neqr_image load_image( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw io_error( "cannot open '" + path + "'" );
  }
  return load_image( in );
}

} /* namespace qimg */
