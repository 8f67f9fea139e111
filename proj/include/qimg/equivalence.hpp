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
  \file equivalence.hpp
  \brief Independent oracles: XOR-cover evaluation, cover equivalence, circuit-vs-image verification
*/

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circuit.hpp"
#include "cube.hpp"
#include "image.hpp"
#include "simulate.hpp"

namespace qimg
{

/*! \brief A full assignment of the position variables; bit i = variable i. */
struct assignment
{
  uint64_t bits = 0;
  uint32_t num_vars = 0;

  /*! \brief Assignment whose symbol string is the binary expansion of `index`. */
  static assignment from_index( uint64_t index, uint32_t num_vars )
  {
    assignment a{ 0, num_vars };
    for ( uint32_t v = 0; v < num_vars; ++v )
    {
      if ( ( index >> ( num_vars - 1 - v ) ) & 1u )
      {
        a.bits |= uint64_t( 1 ) << v;
      }
    }
    return a;
  }

  std::string str() const
  {
    std::string s( num_vars, '0' );
    for ( uint32_t v = 0; v < num_vars; ++v )
    {
      if ( ( bits >> v ) & 1u )
      {
        s[v] = '1';
      }
    }
    return s;
  }

  bool operator==( assignment const& ) const = default;
};

/*! \brief XOR over cubes of whether the cube matches the assignment. */
inline bool esop_eval( esop_cover const& cover, assignment const& a )
{
  if ( a.num_vars != cover.num_vars )
  {
    throw std::invalid_argument( "assignment has " + std::to_string( a.num_vars ) +
                                 " variables, cover has " + std::to_string( cover.num_vars ) );
  }
  bool value = false;
  for ( auto const& c : cover.cubes )
  {
    value ^= c.matches( a.bits );
  }
  return value;
}

struct equivalence_result
{
  bool equivalent = true;
  bool exhaustive = true; /* false when only randomly sampled */
  uint64_t assignments_checked = 0;
  std::optional<assignment> counterexample;
};

inline constexpr uint32_t exhaustive_equivalence_limit = 20;

/*! \brief Compares two covers on every assignment (or 10^6 samples beyond 20 vars).
 *
 * Exhaustive enumeration walks assignments in symbol-string order and reports
 * the first mismatch; sampled runs are evidence, not proof, and say so.
 */
inline equivalence_result check_equivalence( esop_cover const& c1, esop_cover const& c2,
                                             uint64_t sample_count = 1'000'000, uint64_t sample_seed = 1 )
{
  if ( c1.num_vars != c2.num_vars )
  {
    throw std::invalid_argument( "covers have different variable counts" );
  }
  equivalence_result result;
  uint32_t const n = c1.num_vars;
  if ( n <= exhaustive_equivalence_limit )
  {
    uint64_t const total = uint64_t( 1 ) << n;
    for ( uint64_t index = 0; index < total; ++index )
    {
      auto const a = assignment::from_index( index, n );
      ++result.assignments_checked;
      if ( esop_eval( c1, a ) != esop_eval( c2, a ) )
      {
        result.equivalent = false;
        result.counterexample = a;
        return result;
      }
    }
    return result;
  }
  result.exhaustive = false;
  std::mt19937_64 rng( sample_seed );
  uint64_t const mask = n >= 64 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << n ) - 1 );
  for ( uint64_t i = 0; i < sample_count; ++i )
  {
    assignment const a{ rng() & mask, n };
    ++result.assignments_checked;
    if ( esop_eval( c1, a ) != esop_eval( c2, a ) )
    {
      result.equivalent = false;
      result.counterexample = a;
      return result;
    }
  }
  return result;
}

/*! \brief Outcome of replaying a prepared circuit against its source image. */
struct verification_report
{
  struct mismatch
  {
    uint32_t y = 0;
    uint32_t x = 0;
    uint32_t channel = 0;
    uint32_t expected = 0;
    uint32_t actual = 0;

    bool operator==( mismatch const& ) const = default;
  };

  uint64_t positions_checked = 0;
  std::vector<mismatch> mismatches;
  bool position_lines_restored = true;
  bool ancillas_clean = true;

  bool passed() const
  {
    return mismatches.empty() && position_lines_restored && ancillas_clean;
  }
};

inline nlohmann::json to_json( verification_report const& report )
{
  nlohmann::json mismatches = nlohmann::json::array();
  for ( auto const& m : report.mismatches )
  {
    mismatches.push_back( { { "y", m.y },
                            { "x", m.x },
                            { "channel", m.channel },
                            { "expected", m.expected },
                            { "actual", m.actual } } );
  }
  return { { "positions_checked", report.positions_checked },
           { "mismatches", mismatches },
           { "position_lines_restored", report.position_lines_restored },
           { "ancillas_clean", report.ancillas_clean } };
}

/*! \brief Replays the post-H network on every position basis state.
 *
 * The circuit must be in prepared form: exactly one H per position line at
 * the head and none elsewhere.  The Toffoli network after the Hadamard
 * prefix is a classical reversible function, so each position input must
 * reproduce ideal pixel bits on the color lines, restore the position lines
 * and leave every ancilla at zero.  Works on mixed-polarity, lowered and
 * decomposed circuits alike.
 */
inline verification_report verify_image( neqr_image const& img, circuit const& circ )
{
  auto const& layout = circ.layout;
  if ( layout.position_lines != img.num_position_vars() || layout.channels != img.channels() ||
       layout.bits_per_channel != img.q() )
  {
    throw std::invalid_argument( "circuit layout does not match image" );
  }

  /* structural check of the Hadamard prefix */
  std::vector<uint8_t> h_seen( layout.position_lines, 0 );
  size_t head = 0;
  while ( head < circ.gates.size() && circ.gates[head].kind == gate_kind::h )
  {
    uint32_t const line = circ.gates[head].target;
    if ( !layout.is_position( line ) || h_seen[line] )
    {
      throw std::invalid_argument( "circuit is not in prepared form: bad Hadamard prefix" );
    }
    h_seen[line] = 1;
    ++head;
  }
  for ( uint32_t i = 0; i < layout.position_lines; ++i )
  {
    if ( !h_seen[i] )
    {
      throw std::invalid_argument( "circuit is not in prepared form: position line " + std::to_string( i ) +
                                   " lacks its Hadamard" );
    }
  }
  circuit network;
  network.layout = layout;
  network.gates.assign( circ.gates.begin() + static_cast<std::ptrdiff_t>( head ), circ.gates.end() );

  uint32_t const n = layout.position_lines;
  uint32_t const w = img.w();
  uint64_t const positions = img.num_positions();
  size_t const words = n >= 6 ? ( size_t( 1 ) << ( n - 6 ) ) : 1;
  uint64_t const tail_mask = n >= 6 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << positions ) - 1 );

  auto patterns = initial_position_patterns( layout );
  auto const initial = patterns;
  bit_parallel_simulate( network, patterns );

  verification_report report;
  report.positions_checked = positions;

  for ( uint32_t i = 0; i < n; ++i )
  {
    for ( size_t word = 0; word < words; ++word )
    {
      uint64_t const mask = word + 1 == words ? tail_mask : ~uint64_t( 0 );
      if ( ( ( patterns[i][word] ^ initial[i][word] ) & mask ) != 0 )
      {
        report.position_lines_restored = false;
      }
    }
  }
  for ( uint32_t k = 0; k < layout.ancilla_lines; ++k )
  {
    for ( size_t word = 0; word < words; ++word )
    {
      uint64_t const mask = word + 1 == words ? tail_mask : ~uint64_t( 0 );
      if ( ( patterns[layout.ancilla_line( k )][word] & mask ) != 0 )
      {
        report.ancillas_clean = false;
      }
    }
  }

  for ( uint64_t position = 0; position < positions; ++position )
  {
    size_t const word = position >> 6;
    uint32_t const offset = position & 63u;
    for ( uint32_t channel = 0; channel < layout.channels; ++channel )
    {
      uint32_t actual = 0;
      for ( uint32_t bit = 0; bit < layout.bits_per_channel; ++bit )
      {
        uint64_t const value = ( patterns[layout.color_line( channel, bit )][word] >> offset ) & 1u;
        actual |= static_cast<uint32_t>( value ) << ( layout.bits_per_channel - 1 - bit );
      }
      uint32_t const expected = img.value_at_position( position, channel );
      if ( actual != expected )
      {
        report.mismatches.push_back( { static_cast<uint32_t>( position >> w ),
                                       static_cast<uint32_t>( position & ( ( uint64_t( 1 ) << w ) - 1 ) ),
                                       channel, expected, actual } );
      }
    }
  }
  return report;
}

} /* namespace qimg */
