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
  \file simulate.hpp
  \brief Classical reversible simulation and a small dense statevector simulator

  X, CNOT and Toffoli permute basis states, so an H-free circuit is simulated
  with one classical bit per line.  The bit-parallel variant packs one bit per
  input assignment into 64-bit words and pushes all assignments through the
  network at once, which is what makes exhaustive image verification cheap.
*/

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circuit.hpp"

namespace qimg
{

/*! \brief Propagates one classical bit per line through an H-free circuit.
 *
 * Controlled gates flip the target iff every control matches its polarity;
 * mixed polarities are supported.  An H gate is not a permutation of basis
 * states and raises an error.
 */
inline std::vector<uint8_t> classical_simulate( circuit const& circ, std::vector<uint8_t> input )
{
  if ( input.size() != circ.layout.total_lines() )
  {
    throw std::invalid_argument( "input has " + std::to_string( input.size() ) + " bits, circuit has " +
                                 std::to_string( circ.layout.total_lines() ) + " lines" );
  }
  for ( auto const& g : circ.gates )
  {
    if ( g.kind == gate_kind::h )
    {
      throw std::invalid_argument( "H gate is not classical; strip the Hadamard prefix first" );
    }
    bool fire = true;
    for ( auto const& c : g.controls )
    {
      if ( input[c.line] != ( c.pol == polarity::positive ? 1 : 0 ) )
      {
        fire = false;
        break;
      }
    }
    if ( fire )
    {
      input[g.target] ^= 1u;
    }
  }
  return input;
}

/*! \brief One 64-bit-packed truth table per line, bit a = value under assignment a. */
using line_patterns = std::vector<std::vector<uint64_t>>;

namespace detail
{

inline uint64_t projection_word( uint32_t var_bit, uint64_t word_index )
{
  static constexpr uint64_t low_masks[6] = {
      0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
      0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
  if ( var_bit < 6 )
  {
    return low_masks[var_bit];
  }
  return ( ( word_index >> ( var_bit - 6 ) ) & 1u ) ? ~uint64_t( 0 ) : 0;
}

} /* namespace detail */

/*! \brief Initial patterns for sweeping all 2^num_position_vars assignments.
 *
 * Assignment index a enumerates positions; variable i (= position line i)
 * reads bit (n - 1 - i) of a, matching the y-bits-then-x-bits cube order.
 * Color and ancilla lines start at zero.
 */
inline line_patterns initial_position_patterns( qubit_layout const& layout )
{
  uint32_t const n = layout.position_lines;
  size_t const words = n >= 6 ? ( size_t( 1 ) << ( n - 6 ) ) : 1;
  line_patterns patterns( layout.total_lines(), std::vector<uint64_t>( words, 0 ) );
  for ( uint32_t i = 0; i < n; ++i )
  {
    uint32_t const var_bit = n - 1 - i;
    for ( size_t w = 0; w < words; ++w )
    {
      patterns[i][w] = detail::projection_word( var_bit, w );
    }
  }
  return patterns;
}

/*! \brief Pushes every packed assignment through an H-free circuit at once. */
inline void bit_parallel_simulate( circuit const& circ, line_patterns& patterns )
{
  size_t const words = patterns.empty() ? 0 : patterns[0].size();
  std::vector<uint64_t> fire( words );
  for ( auto const& g : circ.gates )
  {
    if ( g.kind == gate_kind::h )
    {
      throw std::invalid_argument( "H gate is not classical; strip the Hadamard prefix first" );
    }
    std::fill( fire.begin(), fire.end(), ~uint64_t( 0 ) );
    for ( auto const& c : g.controls )
    {
      auto const& line = patterns[c.line];
      if ( c.pol == polarity::positive )
      {
        for ( size_t w = 0; w < words; ++w )
        {
          fire[w] &= line[w];
        }
      }
      else
      {
        for ( size_t w = 0; w < words; ++w )
        {
          fire[w] &= ~line[w];
        }
      }
    }
    auto& target = patterns[g.target];
    for ( size_t w = 0; w < words; ++w )
    {
      target[w] ^= fire[w];
    }
  }
}

/*! \brief Dense complex amplitude vector over the circuit's lines.
 *
 * Basis indices read the lines in layout order with line 0 as the most
 * significant bit, so an index written in binary looks like the circuit
 * diagram read top to bottom.
 */
class state_vector
{
public:
  explicit state_vector( uint32_t num_qubits )
      : n_( num_qubits ), amps_( size_t( 1 ) << num_qubits, 0.0 )
  {
    amps_[0] = 1.0;
  }

  uint32_t num_qubits() const { return n_; }
  size_t size() const { return amps_.size(); }

  std::complex<double> amplitude( uint64_t basis ) const { return amps_[basis]; }

  /*! \brief Basis index of the given per-line bits (layout order). */
  static uint64_t basis_index( std::vector<uint8_t> const& bits )
  {
    uint64_t index = 0;
    for ( auto b : bits )
    {
      index = ( index << 1 ) | ( b ? 1u : 0u );
    }
    return index;
  }

  double norm() const
  {
    double sum = 0;
    for ( auto const& a : amps_ )
    {
      sum += std::norm( a );
    }
    return std::sqrt( sum );
  }

  void apply( gate const& g )
  {
    uint64_t const target_mask = line_mask( g.target );
    if ( g.kind == gate_kind::h )
    {
      double const inv_sqrt2 = 1.0 / std::sqrt( 2.0 );
      for ( uint64_t i = 0; i < amps_.size(); ++i )
      {
        if ( ( i & target_mask ) == 0 )
        {
          auto const a0 = amps_[i];
          auto const a1 = amps_[i | target_mask];
          amps_[i] = ( a0 + a1 ) * inv_sqrt2;
          amps_[i | target_mask] = ( a0 - a1 ) * inv_sqrt2;
        }
      }
      return;
    }
    /* X family: swap amplitude pairs where all controls are satisfied */
    uint64_t positive_mask = 0;
    uint64_t care_mask = 0;
    for ( auto const& c : g.controls )
    {
      uint64_t const m = line_mask( c.line );
      care_mask |= m;
      if ( c.pol == polarity::positive )
      {
        positive_mask |= m;
      }
    }
    for ( uint64_t i = 0; i < amps_.size(); ++i )
    {
      if ( ( i & target_mask ) == 0 && ( i & care_mask ) == positive_mask )
      {
        std::swap( amps_[i], amps_[i | target_mask] );
      }
    }
  }

private:
  uint64_t line_mask( uint32_t line ) const
  {
    return uint64_t( 1 ) << ( n_ - 1 - line );
  }

  uint32_t n_;
  std::vector<std::complex<double>> amps_;
};

inline constexpr uint32_t statevector_qubit_limit = 14;

/*! \brief Applies the circuit to |0...0>; dense, capped at 14 qubits. */
inline state_vector statevector_simulate( circuit const& circ )
{
  uint32_t const n = circ.layout.total_lines();
  if ( n > statevector_qubit_limit )
  {
    throw std::invalid_argument( "statevector simulation capped at " +
                                 std::to_string( statevector_qubit_limit ) + " qubits, circuit has " +
                                 std::to_string( n ) );
  }
  state_vector state( n );
  for ( auto const& g : circ.gates )
  {
    state.apply( g );
  }
  return state;
}

} /* namespace qimg */
