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
  \file pipeline.hpp
  \brief End-to-end run: ingest image, minimize every color line, synthesize, lower, emit

  Bitplane minimizations are independent and run in a small worker pool; the
  reported minimize time is the wall-clock sum of the individual calls, which
  is the figure the compression benchmarks quote.  Everything downstream of
  minimization is sequential and deterministic, so identical inputs and flags
  produce byte-identical circuit text.
*/

#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "equivalence.hpp"
#include "image.hpp"
#include "qasm.hpp"
#include "report.hpp"
#include "synthesis.hpp"
#include "ternary_tree.hpp"

namespace qimg
{

enum class report_format
{
  json,
  table
};

struct pipeline_options
{
  std::string input_path;            /* raster file; unused in self-test mode */
  std::optional<uint64_t> seed;      /* random-image self-test mode */
  std::optional<std::string> qasm_path;
  std::optional<std::string> report_path;
  report_format format = report_format::json;
  bool verify = false;
  bool decompose = true;
  uint32_t threads = 0; /* 0 = QIMG_THREADS env var, then hardware concurrency */
};

struct pipeline_result
{
  run_report report;
  circuit prepared; /* after lowering and, unless disabled, decomposition */
  std::string qasm;
  bool verification_failed = false;
};

/*! \brief Deterministic 16x16 8-bit grayscale noise image for self-tests. */
inline neqr_image random_test_image( uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::vector<uint8_t> pixels( 16 * 16 );
  for ( auto& p : pixels )
  {
    p = static_cast<uint8_t>( rng() & 0xff );
  }
  return neqr_image( 16, 16, 1, std::move( pixels ) );
}

namespace detail
{

inline uint32_t resolve_thread_count( uint32_t requested, size_t jobs )
{
  uint32_t threads = requested;
  if ( threads == 0 )
  {
    if ( char const* env = std::getenv( "QIMG_THREADS" ) )
    {
      long const parsed = std::strtol( env, nullptr, 10 );
      if ( parsed > 0 )
      {
        threads = static_cast<uint32_t>( parsed );
      }
    }
  }
  if ( threads == 0 )
  {
    threads = std::max( 1u, std::thread::hardware_concurrency() );
  }
  return static_cast<uint32_t>( std::min<size_t>( threads, std::max<size_t>( jobs, 1 ) ) );
}

struct minimize_job
{
  color_line_cover raw;
  color_line_cover minimized;
  double seconds = 0.0;
};

/* Covers are independent; each worker grabs the next job index. */
inline void minimize_all( std::vector<minimize_job>& jobs, uint32_t threads )
{
  std::atomic<size_t> next{ 0 };
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&]() {
    for ( ;; )
    {
      size_t const i = next.fetch_add( 1 );
      if ( i >= jobs.size() )
      {
        return;
      }
      try
      {
        auto const start = std::chrono::steady_clock::now();
        jobs[i].minimized = { jobs[i].raw.channel, jobs[i].raw.bit, minimize( jobs[i].raw.cover ) };
        jobs[i].seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
      }
      catch ( ... )
      {
        std::lock_guard<std::mutex> lock( error_mutex );
        if ( !error )
        {
          error = std::current_exception();
        }
      }
    }
  };
  if ( threads <= 1 )
  {
    worker();
  }
  else
  {
    std::vector<std::thread> pool;
    pool.reserve( threads );
    for ( uint32_t t = 0; t < threads; ++t )
    {
      pool.emplace_back( worker );
    }
    for ( auto& t : pool )
    {
      t.join();
    }
  }
  if ( error )
  {
    std::rethrow_exception( error );
  }
}

inline void tally_cube_arities( esop_cover const& cover, channel_report& report )
{
  for ( auto const& c : cover.cubes )
  {
    switch ( c.literal_count() )
    {
    case 0:
      ++report.cubes_to_x;
      break;
    case 1:
      ++report.cubes_to_cnot;
      break;
    default:
      ++report.cubes_to_toffoli;
      break;
    }
  }
}

inline void write_text_file( std::string const& path, std::string const& text )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw io_error( "cannot open '" + path + "' for writing" );
  }
  out << text;
  if ( !out )
  {
    throw io_error( "failed writing '" + path + "'" );
  }
}

} /* namespace detail */

/*! \brief Runs the full compile: extract, minimize, synthesize, lower, emit, verify. */
inline pipeline_result run_pipeline( pipeline_options const& opts )
{
  neqr_image const img = opts.seed ? random_test_image( *opts.seed ) : load_image( opts.input_path );

  std::vector<detail::minimize_job> jobs;
  jobs.reserve( static_cast<size_t>( img.channels() ) * img.q() );
  for ( uint32_t channel = 0; channel < img.channels(); ++channel )
  {
    for ( uint32_t bit = 0; bit < img.q(); ++bit )
    {
      jobs.push_back( { bitplane_cover( img, channel, bit ), {}, 0.0 } );
    }
  }
  detail::minimize_all( jobs, detail::resolve_thread_count( opts.threads, jobs.size() ) );

  pipeline_result result;
  auto& report = result.report;
  report.input = opts.seed ? "<random:" + std::to_string( *opts.seed ) + ">" : opts.input_path;
  report.source_rows = img.source_rows();
  report.source_cols = img.source_cols();
  report.padded_rows = img.rows();
  report.padded_cols = img.cols();
  report.h = img.h();
  report.w = img.w();
  report.q = img.q();
  report.num_channels = img.channels();

  qubit_layout const base_layout{ img.num_position_vars(), img.channels(), img.q(), 0 };

  std::vector<color_line_cover> minimized;
  minimized.reserve( jobs.size() );
  report.channels.assign( img.channels(), {} );
  for ( auto const& job : jobs )
  {
    minimized.push_back( job.minimized );
    auto& channel = report.channels[job.raw.channel];
    channel.channel = job.raw.channel;
    channel.initial_toffoli_count += job.raw.cover.size();
    channel.minimized_toffoli_count += job.minimized.cover.size();
    channel.minimize_time_seconds += job.seconds;
    detail::tally_cube_arities( job.minimized.cover, channel );
  }

  circuit lowered = xgate_lowering( synthesize( minimized, base_layout ) );
  circuit decomposed = decompose_multicontrol( lowered );
  result.report.pre_decomposition_counts = gate_stats( lowered );
  result.report.post_decomposition_counts = gate_stats( decomposed );
  uint32_t const physical_qubits = decomposed.layout.total_lines();

  /* per-channel gate figures come from a standalone circuit over that
   * channel's covers; the totals row reflects the real combined circuit.
   * For a single channel the two coincide. */
  for ( auto& channel : report.channels )
  {
    channel.compression_ratio =
        compression_ratio_percent( channel.initial_toffoli_count, channel.minimized_toffoli_count );
    if ( img.channels() == 1 )
    {
      channel.overall_gate_count_pre_decomposition = result.report.pre_decomposition_counts.total();
      channel.overall_gate_count_post_decomposition = result.report.post_decomposition_counts.total();
      channel.qubit_count = physical_qubits;
      continue;
    }
    std::vector<color_line_cover> slice;
    for ( auto const& line : minimized )
    {
      if ( line.channel == channel.channel )
      {
        slice.push_back( { 0, line.bit, line.cover } );
      }
    }
    qubit_layout const slice_layout{ img.num_position_vars(), 1, img.q(), 0 };
    circuit const slice_lowered = xgate_lowering( synthesize( slice, slice_layout ) );
    channel.overall_gate_count_pre_decomposition = gate_stats( slice_lowered ).total();
    circuit const slice_decomposed = decompose_multicontrol( slice_lowered );
    channel.overall_gate_count_post_decomposition = gate_stats( slice_decomposed ).total();
    channel.qubit_count = slice_decomposed.layout.total_lines();
  }

  result.prepared = opts.decompose ? std::move( decomposed ) : std::move( lowered );

  auto& total = report.total;
  for ( auto const& channel : report.channels )
  {
    total.initial_toffoli_count += channel.initial_toffoli_count;
    total.minimized_toffoli_count += channel.minimized_toffoli_count;
    total.minimize_time_seconds += channel.minimize_time_seconds;
    total.cubes_to_x += channel.cubes_to_x;
    total.cubes_to_cnot += channel.cubes_to_cnot;
    total.cubes_to_toffoli += channel.cubes_to_toffoli;
  }
  total.compression_ratio =
      compression_ratio_percent( total.initial_toffoli_count, total.minimized_toffoli_count );
  total.overall_gate_count_pre_decomposition = report.pre_decomposition_counts.total();
  total.overall_gate_count_post_decomposition = report.post_decomposition_counts.total();
  total.qubit_count = physical_qubits;

  /* the QASM subset cannot express undecomposed multi-control gates */
  if ( opts.decompose )
  {
    result.qasm = emit_qasm( result.prepared );
    if ( opts.qasm_path )
    {
      detail::write_text_file( *opts.qasm_path, result.qasm );
    }
  }
  else if ( opts.qasm_path )
  {
    throw std::invalid_argument( "--out requires decomposition; drop --no-decompose" );
  }

  if ( opts.verify )
  {
    report.verification = verify_image( img, result.prepared );
    result.verification_failed = !report.verification->passed();
  }

  if ( opts.report_path )
  {
    detail::write_text_file( *opts.report_path, to_json( report ).dump( 2 ) + "\n" );
  }
  return result;
}

} /* namespace qimg */
