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
  \file qimg.cpp
  \brief Command-line NEQR circuit compiler

  Exit codes: 0 success, 1 I/O or processing error, 2 verification failure,
  3 bad arguments.
*/

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <qimg/qimg.hpp>

int main( int argc, char** argv )
{
  CLI::App app{ "qimg - compiles a raster image into a minimized NEQR preparation circuit" };

  std::string input;
  std::string out_path;
  std::string report_path;
  std::string format = "json";
  bool verify = false;
  bool no_decompose = false;
  uint32_t threads = 0;
  uint64_t seed = 0;

  app.add_option( "input", input, "PGM (P2/P5) or PPM (P3/P6) image, 8-bit" );
  app.add_option( "--out,-o", out_path, "write the compiled circuit as OpenQASM 2.0" );
  app.add_option( "--report,-r", report_path, "write the run report as JSON" );
  app.add_option( "--format", format, "stdout report format" )
      ->check( CLI::IsMember( { "json", "table" } ) );
  app.add_flag( "--verify", verify, "replay the circuit against the image on every position" );
  app.add_flag( "--no-decompose", no_decompose, "keep multi-control Toffolis (no QASM output)" );
  app.add_option( "--threads", threads, "worker threads for bitplane minimization (env QIMG_THREADS)" );
  auto* seed_opt = app.add_option( "--seed", seed, "random-image self-test mode (16x16 grayscale; implies --verify)" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return 3;
  }

  bool const seed_mode = seed_opt->count() > 0;
  if ( seed_mode == !input.empty() )
  {
    std::cerr << "error: provide exactly one of an input image or --seed\n";
    return 3;
  }
  if ( no_decompose && !out_path.empty() )
  {
    std::cerr << "error: --out requires decomposition; drop --no-decompose\n";
    return 3;
  }

  qimg::pipeline_options opts;
  opts.input_path = input;
  if ( seed_mode )
  {
    opts.seed = seed;
    opts.verify = true;
  }
  if ( !out_path.empty() )
  {
    opts.qasm_path = out_path;
  }
  if ( !report_path.empty() )
  {
    opts.report_path = report_path;
  }
  opts.format = format == "table" ? qimg::report_format::table : qimg::report_format::json;
  opts.verify = opts.verify || verify;
  opts.decompose = !no_decompose;
  opts.threads = threads;

  try
  {
    auto const result = qimg::run_pipeline( opts );
    if ( opts.format == qimg::report_format::table )
    {
      std::cout << qimg::format_table( result.report );
    }
    else
    {
      std::cout << qimg::to_json( result.report ).dump( 2 ) << '\n';
    }
    if ( result.report.verification )
    {
      auto const& v = *result.report.verification;
      std::cerr << "verify: " << v.positions_checked << " positions, " << v.mismatches.size()
                << " mismatches, position lines " << ( v.position_lines_restored ? "restored" : "CORRUPTED" )
                << ", ancillas " << ( v.ancillas_clean ? "clean" : "DIRTY" ) << '\n';
    }
    if ( result.verification_failed )
    {
      return 2;
    }
  }
  catch ( qimg::io_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
