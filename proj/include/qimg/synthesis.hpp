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
  \file synthesis.hpp
  \brief Cover-to-circuit assembly, X-gate polarity lowering and multi-control decomposition
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circuit.hpp"
#include "image.hpp"

namespace qimg
{

/*! \brief Assembles the NEQR preparation circuit from per-color-line covers.
 *
 * Emits H on every position line, then walks the covers sorted by (channel,
 * bit) and lowers each cube to one gate targeting its color line: one control
 * per non-don't-care symbol (0 negative, 1 positive), a lone control becomes
 * a CNOT and an all-don't-care cube a plain X.
 */
inline circuit synthesize( std::vector<color_line_cover> const& covers, qubit_layout layout )
{
  circuit circ;
  circ.layout = layout;
  for ( uint32_t i = 0; i < layout.position_lines; ++i )
  {
    circ.gates.push_back( gate::make_h( layout.position_line( i ) ) );
  }
  std::vector<color_line_cover const*> ordered;
  ordered.reserve( covers.size() );
  for ( auto const& line : covers )
  {
    ordered.push_back( &line );
  }
  std::stable_sort( ordered.begin(), ordered.end(), []( auto const* a, auto const* b ) {
    return a->channel != b->channel ? a->channel < b->channel : a->bit < b->bit;
  } );
  for ( auto const* line : ordered )
  {
    if ( line->cover.num_vars != layout.position_lines )
    {
      throw std::invalid_argument( "layout mismatch: cover has " + std::to_string( line->cover.num_vars ) +
                                   " variables, layout has " + std::to_string( layout.position_lines ) +
                                   " position lines" );
    }
    uint32_t const target = layout.color_line( line->channel, line->bit );
    for ( auto const& c : line->cover.cubes )
    {
      std::vector<control> controls;
      controls.reserve( c.literal_count() );
      for ( uint32_t v = 0; v < c.num_vars(); ++v )
      {
        switch ( c.at( v ) )
        {
        case trit::zero:
          controls.push_back( { layout.position_line( v ), polarity::negative } );
          break;
        case trit::one:
          controls.push_back( { layout.position_line( v ), polarity::positive } );
          break;
        case trit::dc:
          break;
        }
      }
      if ( controls.empty() )
      {
        circ.gates.push_back( gate::make_x( target ) );
      }
      else if ( controls.size() == 1 )
      {
        circ.gates.push_back( gate::make_cnot( controls[0], target ) );
      }
      else
      {
        circ.gates.push_back( gate::make_toffoli( std::move( controls ), target ) );
      }
    }
  }
  return circ;
}

/*! \brief Converts every negative control to positive by inserting X gates.
 *
 * A single left-to-right scan keeps a flip-state bit per line: inserting an X
 * before a gate flips the line, and a later positive control on a flipped
 * line inserts another X to undo it.  Once all gates are processed, any line
 * still flipped gets a restoring X, so position lines end where they started.
 * The output computes the same transformation with positive controls only.
 */
inline circuit xgate_lowering( circuit const& circ )
{
  circuit out;
  out.layout = circ.layout;
  out.gates.reserve( circ.gates.size() );
  std::vector<uint8_t> flipped( circ.layout.total_lines(), 0 );
  for ( auto const& g : circ.gates )
  {
    gate lowered = g;
    for ( auto& c : lowered.controls )
    {
      if ( !flipped[c.line] && c.pol == polarity::negative )
      {
        out.gates.push_back( gate::make_x( c.line ) );
        flipped[c.line] = 1;
      }
      else if ( flipped[c.line] && c.pol == polarity::positive )
      {
        out.gates.push_back( gate::make_x( c.line ) );
        flipped[c.line] = 0;
      }
      c.pol = polarity::positive;
    }
    out.gates.push_back( std::move( lowered ) );
  }
  for ( uint32_t line = 0; line < flipped.size(); ++line )
  {
    if ( flipped[line] )
    {
      out.gates.push_back( gate::make_x( line ) );
    }
  }
  return out;
}

/*! \brief Expands every k-control Toffoli with k >= 3 into the ancilla ladder.
 *
 * k - 1 two-control Toffolis compute the AND chain into ancillas, one CNOT
 * copies the last ancilla onto the target, and the same Toffolis run in
 * reverse to uncompute, so each expansion costs exactly 2(k - 1) Toffolis
 * plus one CNOT and every ancilla starts and ends at zero.  The shared pool
 * is sized to the largest control count; gates with at most two controls pass
 * through unchanged.  Requires positive controls (run after xgate_lowering).
 */
inline circuit decompose_multicontrol( circuit const& circ )
{
  uint32_t needed = 0;
  for ( auto const& g : circ.gates )
  {
    if ( !g.all_controls_positive() )
    {
      throw std::invalid_argument( "decompose_multicontrol requires positive controls; run xgate_lowering first" );
    }
    if ( g.controls.size() >= 3 )
    {
      needed = std::max( needed, static_cast<uint32_t>( g.controls.size() ) - 1 );
    }
  }

  circuit out;
  out.layout = circ.layout;
  out.layout.ancilla_lines = std::max( out.layout.ancilla_lines, needed );
  for ( auto const& g : circ.gates )
  {
    if ( g.controls.size() < 3 )
    {
      out.gates.push_back( g );
      continue;
    }
    size_t const k = g.controls.size();
    std::vector<gate> ladder;
    ladder.reserve( k - 1 );
    ladder.push_back( gate::make_toffoli(
        { g.controls[0], g.controls[1] }, out.layout.ancilla_line( 0 ) ) );
    for ( size_t i = 2; i < k; ++i )
    {
      ladder.push_back( gate::make_toffoli(
          { g.controls[i], { out.layout.ancilla_line( static_cast<uint32_t>( i ) - 2 ), polarity::positive } },
          out.layout.ancilla_line( static_cast<uint32_t>( i ) - 1 ) ) );
    }
    for ( auto const& step : ladder )
    {
      out.gates.push_back( step );
    }
    out.gates.push_back( gate::make_cnot(
        { out.layout.ancilla_line( static_cast<uint32_t>( k ) - 2 ), polarity::positive }, g.target ) );
    for ( auto it = ladder.rbegin(); it != ladder.rend(); ++it )
    {
      out.gates.push_back( *it );
    }
  }
  return out;
}

} /* namespace qimg */
