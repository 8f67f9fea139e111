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
  \file pla.hpp
  \brief Minimal PLA-style text ingestion for ESOP covers

  One cube per line over the characters {0, 1, -}.  Lines starting with `#`
  are comments.  The first non-comment line may be `.i N` declaring the
  variable count; otherwise the count is inferred from the first cube.  Other
  dot-directives (`.o`, `.p`, `.e`, ...) are accepted and ignored so that
  files written for two-level minimizers load unchanged.
*/

#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "cube.hpp"

namespace qimg
{

inline esop_cover read_pla( std::istream& in )
{
  esop_cover cover;
  bool have_vars = false;
  std::set<std::string> seen;
  std::string line;
  size_t lineno = 0;

  while ( std::getline( in, line ) )
  {
    ++lineno;
    size_t const begin = line.find_first_not_of( " \t\r" );
    if ( begin == std::string::npos )
    {
      continue;
    }
    size_t const end = line.find_last_not_of( " \t\r" );
    std::string tok = line.substr( begin, end - begin + 1 );
    if ( tok[0] == '#' )
    {
      continue;
    }
    if ( tok[0] == '.' )
    {
      if ( tok.rfind( ".i", 0 ) == 0 && ( tok.size() == 2 || tok[2] == ' ' || tok[2] == '\t' ) )
      {
        std::istringstream iss( tok.substr( 2 ) );
        long n = -1;
        iss >> n;
        if ( n < 0 || n > static_cast<long>( cube::max_vars ) )
        {
          throw std::invalid_argument( "pla line " + std::to_string( lineno ) + ": bad .i declaration" );
        }
        cover.num_vars = static_cast<uint32_t>( n );
        have_vars = true;
      }
      continue;
    }
    for ( char c : tok )
    {
      if ( c != '0' && c != '1' && c != '-' )
      {
        throw std::invalid_argument( "pla line " + std::to_string( lineno ) + ": invalid symbol '" + c + "'" );
      }
    }
    if ( !have_vars )
    {
      if ( tok.size() > cube::max_vars )
      {
        throw std::invalid_argument( "pla line " + std::to_string( lineno ) + ": too many variables" );
      }
      cover.num_vars = static_cast<uint32_t>( tok.size() );
      have_vars = true;
    }
    if ( tok.size() != cover.num_vars )
    {
      throw std::invalid_argument( "pla line " + std::to_string( lineno ) + ": cube length " +
                                   std::to_string( tok.size() ) + " does not match variable count " +
                                   std::to_string( cover.num_vars ) );
    }
    if ( !seen.insert( tok ).second )
    {
      throw std::invalid_argument( "pla line " + std::to_string( lineno ) + ": duplicate cube " + tok );
    }
    cover.cubes.emplace_back( tok );
  }
  return cover;
}

inline void write_pla( std::ostream& out, esop_cover const& cover )
{
  out << ".i " << cover.num_vars << '\n';
  for ( auto const& c : cover.cubes )
  {
    out << c.str() << '\n';
  }
  out << ".e\n";
}

} /* namespace qimg */
