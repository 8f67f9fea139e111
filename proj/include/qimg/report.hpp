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
  \file report.hpp
  \brief Per-run compression and gate-count reporting, as JSON or an aligned table
*/

#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circuit.hpp"
#include "equivalence.hpp"

namespace qimg
{

/*! \brief 100 * (initial - minimized) / initial, and 0 for an empty network. */
inline double compression_ratio_percent( uint64_t initial, uint64_t minimized )
{
  if ( initial == 0 )
  {
    return 0.0;
  }
  return 100.0 * static_cast<double>( initial - minimized ) / static_cast<double>( initial );
}

/*! \brief Counts for one channel (or the whole run, in the totals slot).
 *
 * minimized_toffoli_count counts every cube surviving minimization; the
 * cubes_to_* fields break the same cubes out by the gate they lower to, so
 * the numbers reconcile exactly with gate_stats of the synthesized circuit.
 */
struct channel_report
{
  uint32_t channel = 0;
  uint64_t initial_toffoli_count = 0;
  uint64_t minimized_toffoli_count = 0;
  double compression_ratio = 0.0;
  double minimize_time_seconds = 0.0;
  uint64_t cubes_to_x = 0;
  uint64_t cubes_to_cnot = 0;
  uint64_t cubes_to_toffoli = 0;
  uint64_t overall_gate_count_pre_decomposition = 0;
  uint64_t overall_gate_count_post_decomposition = 0;
  uint32_t qubit_count = 0;
};

struct run_report
{
  std::string input;
  uint32_t source_rows = 0;
  uint32_t source_cols = 0;
  uint32_t padded_rows = 0;
  uint32_t padded_cols = 0;
  uint32_t h = 0;
  uint32_t w = 0;
  uint32_t q = 0;
  uint32_t num_channels = 1;

  std::vector<channel_report> channels;
  channel_report total;

  gate_counts pre_decomposition_counts;
  gate_counts post_decomposition_counts;

  std::optional<verification_report> verification;
};

namespace detail
{

inline nlohmann::json channel_to_json( channel_report const& c, bool with_channel )
{
  nlohmann::json j = { { "initial_toffoli_count", c.initial_toffoli_count },
                       { "minimized_toffoli_count", c.minimized_toffoli_count },
                       { "compression_ratio_percent", c.compression_ratio },
                       { "minimize_time_seconds", c.minimize_time_seconds },
                       { "cubes_to_x", c.cubes_to_x },
                       { "cubes_to_cnot", c.cubes_to_cnot },
                       { "cubes_to_toffoli", c.cubes_to_toffoli },
                       { "overall_gate_count_pre_decomposition", c.overall_gate_count_pre_decomposition },
                       { "overall_gate_count_post_decomposition", c.overall_gate_count_post_decomposition },
                       { "qubit_count", c.qubit_count } };
  if ( with_channel )
  {
    j["channel"] = c.channel;
  }
  return j;
}

inline nlohmann::json counts_to_json( gate_counts const& counts )
{
  return { { "x", counts.x },
           { "h", counts.h },
           { "cnot", counts.cnot },
           { "toffoli", counts.toffoli },
           { "total", counts.total() } };
}

inline std::string fixed( double value, int digits )
{
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.*f", digits, value );
  return buf;
}

} /* namespace detail */

inline nlohmann::json to_json( run_report const& report )
{
  nlohmann::json channels = nlohmann::json::array();
  for ( auto const& c : report.channels )
  {
    channels.push_back( detail::channel_to_json( c, true ) );
  }
  nlohmann::json j = { { "input", report.input },
                       { "image",
                         { { "source_rows", report.source_rows },
                           { "source_cols", report.source_cols },
                           { "padded_rows", report.padded_rows },
                           { "padded_cols", report.padded_cols },
                           { "h", report.h },
                           { "w", report.w },
                           { "q", report.q },
                           { "channels", report.num_channels } } },
                       { "channels", channels },
                       { "total", detail::channel_to_json( report.total, false ) },
                       { "gate_counts_pre_decomposition", detail::counts_to_json( report.pre_decomposition_counts ) },
                       { "gate_counts_post_decomposition", detail::counts_to_json( report.post_decomposition_counts ) } };
  if ( report.verification )
  {
    j["verification"] = to_json( *report.verification );
  }
  return j;
}

/*! \brief Aligned human-readable table with the classic benchmark columns. */
inline std::string format_table( run_report const& report )
{
  static char const* const channel_names[3] = { "R", "G", "B" };
  std::vector<std::vector<std::string>> rows;
  rows.push_back( { "Image File", "Initial Toffoli Count", "Minimized Toffoli Count",
                    "Compression Ratio (%)", "Time (s)", "Overall Gate Count" } );
  auto add_row = [&rows]( std::string name, channel_report const& c ) {
    rows.push_back( { std::move( name ), std::to_string( c.initial_toffoli_count ),
                      std::to_string( c.minimized_toffoli_count ), detail::fixed( c.compression_ratio, 2 ),
                      detail::fixed( c.minimize_time_seconds, 4 ),
                      std::to_string( c.overall_gate_count_post_decomposition ) } );
  };
  if ( report.channels.size() > 1 )
  {
    for ( auto const& c : report.channels )
    {
      std::string const suffix = c.channel < 3 ? channel_names[c.channel] : std::to_string( c.channel );
      add_row( report.input + ":" + suffix, c );
    }
  }
  add_row( report.input, report.total );

  std::vector<size_t> widths( rows[0].size(), 0 );
  for ( auto const& row : rows )
  {
    for ( size_t i = 0; i < row.size(); ++i )
    {
      widths[i] = std::max( widths[i], row[i].size() );
    }
  }
  std::ostringstream out;
  for ( auto const& row : rows )
  {
    for ( size_t i = 0; i < row.size(); ++i )
    {
      out << row[i];
      if ( i + 1 < row.size() )
      {
        out << std::string( widths[i] - row[i].size() + 2, ' ' );
      }
    }
    out << '\n';
  }
  return out.str();
}

} /* namespace qimg */
