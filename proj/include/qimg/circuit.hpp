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
  \file circuit.hpp
  \brief Gate-level IR: X, H, CNOT and multi-control Toffoli over a named qubit layout
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qimg
{

enum class gate_kind : uint8_t
{
  x,
  h,
  cnot,
  toffoli
};

enum class polarity : uint8_t
{
  negative = 0, /* fires on |0> */
  positive = 1  /* fires on |1> */
};

struct control
{
  uint32_t line = 0;
  polarity pol = polarity::positive;

  bool operator==( control const& ) const = default;
};

/*! \brief One gate; X and H carry no controls, CNOT one, Toffoli at least two. */
struct gate
{
  gate_kind kind = gate_kind::x;
  uint32_t target = 0;
  std::vector<control> controls;

  static gate make_x( uint32_t target )
  {
    return gate{ gate_kind::x, target, {} };
  }

  static gate make_h( uint32_t target )
  {
    return gate{ gate_kind::h, target, {} };
  }

  static gate make_cnot( control c, uint32_t target )
  {
    return gate{ gate_kind::cnot, target, { c } };
  }

  static gate make_toffoli( std::vector<control> controls, uint32_t target )
  {
    if ( controls.size() < 2 )
    {
      throw std::invalid_argument( "toffoli requires at least two controls" );
    }
    return gate{ gate_kind::toffoli, target, std::move( controls ) };
  }

  bool all_controls_positive() const
  {
    for ( auto const& c : controls )
    {
      if ( c.pol == polarity::negative )
      {
        return false;
      }
    }
    return true;
  }

  bool operator==( gate const& ) const = default;
};

/*! \brief Wire numbering of a prepared circuit.
 *
 * Position lines come first (L_0 is the most significant y bit), then q color
 * lines per channel with C_0 the most significant plane, then the shared
 * ancilla pool.
 */
struct qubit_layout
{
  uint32_t position_lines = 0;
  uint32_t channels = 1;
  uint32_t bits_per_channel = 8;
  uint32_t ancilla_lines = 0;

  uint32_t total_lines() const
  {
    return position_lines + channels * bits_per_channel + ancilla_lines;
  }

  uint32_t position_line( uint32_t i ) const
  {
    check( i < position_lines, "position line" );
    return i;
  }

  uint32_t color_line( uint32_t channel, uint32_t bit ) const
  {
    check( channel < channels && bit < bits_per_channel, "color line" );
    return position_lines + channel * bits_per_channel + bit;
  }

  uint32_t ancilla_line( uint32_t k ) const
  {
    check( k < ancilla_lines, "ancilla line" );
    return position_lines + channels * bits_per_channel + k;
  }

  bool is_position( uint32_t line ) const { return line < position_lines; }

  bool is_color( uint32_t line ) const
  {
    return line >= position_lines && line < position_lines + channels * bits_per_channel;
  }

  bool is_ancilla( uint32_t line ) const
  {
    return line >= position_lines + channels * bits_per_channel && line < total_lines();
  }

  bool operator==( qubit_layout const& ) const = default;

private:
  static void check( bool ok, char const* what )
  {
    if ( !ok )
    {
      throw std::out_of_range( std::string( what ) + " index out of range" );
    }
  }
};

struct circuit
{
  qubit_layout layout;
  std::vector<gate> gates;

  bool operator==( circuit const& ) const = default;
};

struct gate_counts
{
  uint64_t x = 0;
  uint64_t h = 0;
  uint64_t cnot = 0;
  uint64_t toffoli = 0;

  uint64_t total() const { return x + h + cnot + toffoli; }

  bool operator==( gate_counts const& ) const = default;
};

/*! \brief Exact tally per gate kind. */
inline gate_counts gate_stats( circuit const& circ )
{
  gate_counts counts;
  for ( auto const& g : circ.gates )
  {
    switch ( g.kind )
    {
    case gate_kind::x:
      ++counts.x;
      break;
    case gate_kind::h:
      ++counts.h;
      break;
    case gate_kind::cnot:
      ++counts.cnot;
      break;
    case gate_kind::toffoli:
      ++counts.toffoli;
      break;
    }
  }
  return counts;
}

} /* namespace qimg */
