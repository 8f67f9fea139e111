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
  \file qasm.hpp
  \brief Deterministic OpenQASM-2.0-subset emission (x, h, cx, ccx)
*/

#pragma once

#include <sstream>
#include <string>

#include "circuit.hpp"

namespace qimg
{

namespace detail
{

inline std::string qasm_operand( qubit_layout const& layout, uint32_t line )
{
  if ( layout.is_position( line ) )
  {
    return "pos[" + std::to_string( line ) + "]";
  }
  if ( layout.is_color( line ) )
  {
    uint32_t const offset = line - layout.position_lines;
    uint32_t const channel = offset / layout.bits_per_channel;
    uint32_t const bit = offset % layout.bits_per_channel;
    return "col" + std::to_string( channel ) + "[" + std::to_string( bit ) + "]";
  }
  uint32_t const k = line - layout.position_lines - layout.channels * layout.bits_per_channel;
  return "anc[" + std::to_string( k ) + "]";
}

} /* namespace detail */

/*! \brief Serializes a lowered, decomposed circuit as OpenQASM 2.0 text.
 *
 * Only x, h, cx and positive two-control ccx are representable; a gate with
 * three or more controls or a remaining negative control is an emission error.
 * Output is byte-identical across runs for the same circuit.
 */
inline std::string emit_qasm( circuit const& circ )
{
  auto const& layout = circ.layout;
  std::ostringstream out;
  out << "// NEQR preparation circuit\n";
  out << "// line mapping: position line L_i -> pos[i]; color bit j of channel c -> col<c>[j];\n";
  out << "// ancilla k -> anc[k]; color bit 0 is the most significant plane\n";
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  if ( layout.position_lines > 0 )
  {
    out << "qreg pos[" << layout.position_lines << "];\n";
  }
  for ( uint32_t c = 0; c < layout.channels; ++c )
  {
    out << "qreg col" << c << "[" << layout.bits_per_channel << "];\n";
  }
  if ( layout.ancilla_lines > 0 )
  {
    out << "qreg anc[" << layout.ancilla_lines << "];\n";
  }
  for ( auto const& g : circ.gates )
  {
    if ( g.controls.size() > 2 )
    {
      throw std::invalid_argument( "cannot emit a gate with " + std::to_string( g.controls.size() ) +
                                   " controls; run decompose_multicontrol first" );
    }
    if ( !g.all_controls_positive() )
    {
      throw std::invalid_argument( "cannot emit negative controls; run xgate_lowering first" );
    }
    switch ( g.kind )
    {
    case gate_kind::x:
      out << "x " << detail::qasm_operand( layout, g.target ) << ";\n";
      break;
    case gate_kind::h:
      out << "h " << detail::qasm_operand( layout, g.target ) << ";\n";
      break;
    case gate_kind::cnot:
      out << "cx " << detail::qasm_operand( layout, g.controls[0].line ) << ","
          << detail::qasm_operand( layout, g.target ) << ";\n";
      break;
    case gate_kind::toffoli:
      out << "ccx " << detail::qasm_operand( layout, g.controls[0].line ) << ","
          << detail::qasm_operand( layout, g.controls[1].line ) << ","
          << detail::qasm_operand( layout, g.target ) << ";\n";
      break;
    }
  }
  return out.str();
}

} /* namespace qimg */
