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
  \file helpers.hpp
  \brief Shared test utilities and the naive string-based oracles

  The oracles here work on symbol strings only and never touch the packed
  cube representation or the tree, so they stay independent of the code paths
  they check.
*/

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <qimg/cube.hpp>
#include <qimg/image.hpp>

namespace qimg::test
{

inline std::vector<std::string> cube_strings( esop_cover const& cover )
{
  std::vector<std::string> out;
  out.reserve( cover.cubes.size() );
  for ( auto const& c : cover.cubes )
  {
    out.push_back( c.str() );
  }
  return out;
}

inline std::vector<std::string> sorted_cube_strings( esop_cover const& cover )
{
  auto out = cube_strings( cover );
  std::sort( out.begin(), out.end() );
  return out;
}

inline std::vector<std::string> sorted( std::vector<std::string> v )
{
  std::sort( v.begin(), v.end() );
  return v;
}

/* --- naive oracles, character arithmetic only --------------------------- */

inline bool naive_cube_matches( std::string const& cube, std::string const& assignment )
{
  for ( size_t i = 0; i < cube.size(); ++i )
  {
    if ( cube[i] != '-' && cube[i] != assignment[i] )
    {
      return false;
    }
  }
  return true;
}

inline bool naive_esop_eval( std::vector<std::string> const& cubes, std::string const& assignment )
{
  bool value = false;
  for ( auto const& c : cubes )
  {
    value ^= naive_cube_matches( c, assignment );
  }
  return value;
}

inline std::vector<std::string> all_assignments( uint32_t num_vars )
{
  std::vector<std::string> out;
  out.reserve( size_t( 1 ) << num_vars );
  for ( uint64_t index = 0; index < ( uint64_t( 1 ) << num_vars ); ++index )
  {
    std::string s( num_vars, '0' );
    for ( uint32_t v = 0; v < num_vars; ++v )
    {
      if ( ( index >> ( num_vars - 1 - v ) ) & 1u )
      {
        s[v] = '1';
      }
    }
    out.push_back( std::move( s ) );
  }
  return out;
}

inline std::string naive_rotate_left( std::string cube )
{
  if ( cube.size() > 1 )
  {
    std::rotate( cube.begin(), cube.begin() + 1, cube.end() );
  }
  return cube;
}

/* --- random generators --------------------------------------------------- */

inline esop_cover random_cover( std::mt19937_64& rng, uint32_t num_vars, size_t max_cubes,
                                double dc_probability = 0.3 )
{
  std::uniform_int_distribution<size_t> count_dist( 0, max_cubes );
  std::uniform_real_distribution<double> real( 0.0, 1.0 );
  std::uniform_int_distribution<int> bit( 0, 1 );
  std::set<std::string> seen;
  size_t const target = count_dist( rng );
  for ( size_t attempts = 0; seen.size() < target && attempts < 64 * max_cubes + 64; ++attempts )
  {
    std::string s( num_vars, '-' );
    for ( uint32_t v = 0; v < num_vars; ++v )
    {
      if ( real( rng ) >= dc_probability )
      {
        s[v] = bit( rng ) ? '1' : '0';
      }
    }
    seen.insert( s );
  }
  esop_cover cover( num_vars );
  for ( auto const& s : seen )
  {
    cover.cubes.emplace_back( s );
  }
  return cover;
}

inline neqr_image random_image( std::mt19937_64& rng, uint32_t rows, uint32_t cols, uint32_t channels = 1 )
{
  std::vector<uint8_t> pixels( static_cast<size_t>( rows ) * cols * channels );
  for ( auto& p : pixels )
  {
    p = static_cast<uint8_t>( rng() & 0xff );
  }
  return neqr_image( rows, cols, channels, std::move( pixels ) );
}

/* --- tiny PNM builders ---------------------------------------------------- */

inline std::string ascii_pgm( uint32_t rows, uint32_t cols, std::vector<uint32_t> const& values )
{
  std::string s = "P2\n" + std::to_string( cols ) + " " + std::to_string( rows ) + "\n255\n";
  for ( auto v : values )
  {
    s += std::to_string( v ) + "\n";
  }
  return s;
}

} /* namespace qimg::test */
