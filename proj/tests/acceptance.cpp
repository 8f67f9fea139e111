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
  \file acceptance.cpp
  \brief End-to-end acceptance suite; prints one pass/fail line per criterion

  Every tolerance is pinned here in code.  The suite exits nonzero if any
  criterion fails.
*/

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <qimg/qimg.hpp>

namespace
{

using clock_type = std::chrono::steady_clock;

double seconds_since( clock_type::time_point start )
{
  return std::chrono::duration<double>( clock_type::now() - start ).count();
}

struct criterion_outcome
{
  bool passed = true;
  std::string detail;

  void require( bool ok, std::string const& what )
  {
    if ( !ok && passed )
    {
      passed = false;
      detail = what;
    }
  }
};

std::vector<std::string> sorted_strings( qimg::esop_cover const& cover )
{
  std::vector<std::string> out;
  for ( auto const& c : cover.cubes )
  {
    out.push_back( c.str() );
  }
  std::sort( out.begin(), out.end() );
  return out;
}

qimg::neqr_image reference_image()
{
  return qimg::neqr_image( 2, 2, 1, { 193, 194, 255, 0 } );
}

qimg::circuit compile_image( qimg::neqr_image const& img )
{
  std::vector<qimg::color_line_cover> covers;
  for ( uint32_t channel = 0; channel < img.channels(); ++channel )
  {
    for ( uint32_t bit = 0; bit < img.q(); ++bit )
    {
      covers.push_back( { channel, bit, qimg::minimize( qimg::bitplane_cover( img, channel, bit ).cover ) } );
    }
  }
  qimg::qubit_layout const layout{ img.num_position_vars(), img.channels(), img.q(), 0 };
  return qimg::decompose_multicontrol( qimg::xgate_lowering( qimg::synthesize( covers, layout ) ) );
}

/* 1. three minterms reduce to {0-, 10}, exactly, in under a millisecond */
criterion_outcome criterion_minterm_reduction()
{
  criterion_outcome outcome;
  auto const input = qimg::esop_cover::from_strings( 2, { "00", "01", "10" } );
  auto const start = clock_type::now();
  auto const minimized = qimg::minimize( input );
  double const elapsed = seconds_since( start );
  outcome.require( sorted_strings( minimized ) == std::vector<std::string>{ "0-", "10" },
                   "expected {0-, 10}, got " + minimized.str() );
  outcome.require( elapsed < 1e-3, "took " + std::to_string( elapsed * 1e3 ) + " ms, budget 1 ms" );
  return outcome;
}

/* 2. step-by-step trace: merge to {0-, 1-}, rotate to {-0, -1}, end at {--} */
criterion_outcome criterion_step_trace()
{
  criterion_outcome outcome;
  qimg::ternary_tree tree( qimg::esop_cover::from_strings( 2, { "0-", "10", "11" } ) );

  tree.merge_leaves();
  std::vector<std::string> after_merge;
  for ( auto const& c : tree.cubes_in_tree_order() )
  {
    after_merge.push_back( c.str() );
  }
  std::sort( after_merge.begin(), after_merge.end() );
  outcome.require( after_merge == std::vector<std::string>{ "0-", "1-" },
                   "first merge pass did not yield {0-, 1-}" );

  tree.rotate();
  std::vector<std::string> after_rotation;
  for ( auto const& c : tree.cubes_in_tree_order() )
  {
    after_rotation.push_back( c.str() );
  }
  std::sort( after_rotation.begin(), after_rotation.end() );
  outcome.require( after_rotation == std::vector<std::string>{ "-0", "-1" },
                   "first rotation did not yield {-0, -1}" );

  auto const minimized = qimg::minimize( qimg::esop_cover::from_strings( 2, { "0-", "10", "11" } ) );
  outcome.require( sorted_strings( minimized ) == std::vector<std::string>{ "--" },
                   "full run did not collapse to {--}" );
  return outcome;
}

/* 3. the four-Toffoli mask walk lowers to the exact reference sequence */
criterion_outcome criterion_lowering_walk()
{
  criterion_outcome outcome;
  qimg::qubit_layout const layout{ 2, 1, 1, 0 };
  qimg::circuit circ;
  circ.layout = layout;
  auto const target = layout.color_line( 0, 0 );
  auto add = [&]( qimg::polarity p0, qimg::polarity p1 ) {
    circ.gates.push_back( qimg::gate::make_toffoli( { { 0, p0 }, { 1, p1 } }, target ) );
  };
  using qimg::polarity;
  add( polarity::positive, polarity::positive );
  add( polarity::negative, polarity::positive );
  add( polarity::negative, polarity::negative );
  add( polarity::positive, polarity::negative );

  auto const lowered = qimg::xgate_lowering( circ );
  auto positive_toffoli = [&]() {
    return qimg::gate::make_toffoli(
        { { 0, polarity::positive }, { 1, polarity::positive } }, target );
  };
  std::vector<qimg::gate> const expected{
      positive_toffoli(), qimg::gate::make_x( 0 ), positive_toffoli(), qimg::gate::make_x( 1 ),
      positive_toffoli(), qimg::gate::make_x( 0 ), positive_toffoli(), qimg::gate::make_x( 1 ) };
  outcome.require( lowered.gates == expected, "lowered sequence differs from the reference walk" );
  auto const counts = qimg::gate_stats( lowered );
  outcome.require( counts.toffoli == 4 && counts.x == 4, "expected 4 Toffolis and 4 X gates" );
  return outcome;
}

/* 4. k-control decomposition counts and exhaustive behavior for k = 3..8 */
criterion_outcome criterion_decomposition()
{
  criterion_outcome outcome;
  for ( uint32_t k = 3; k <= 8; ++k )
  {
    qimg::qubit_layout const layout{ k, 1, 1, 0 };
    qimg::circuit circ;
    circ.layout = layout;
    std::vector<qimg::control> controls;
    for ( uint32_t i = 0; i < k; ++i )
    {
      controls.push_back( { i, qimg::polarity::positive } );
    }
    circ.gates.push_back( qimg::gate::make_toffoli( controls, layout.color_line( 0, 0 ) ) );
    auto const decomposed = qimg::decompose_multicontrol( circ );

    auto const counts = qimg::gate_stats( decomposed );
    outcome.require( counts.toffoli == 2 * ( k - 1 ), "k=" + std::to_string( k ) + ": Toffoli count" );
    outcome.require( counts.cnot == 1, "k=" + std::to_string( k ) + ": CNOT count" );
    outcome.require( decomposed.layout.ancilla_lines == k - 1,
                     "k=" + std::to_string( k ) + ": ancilla count" );

    for ( uint64_t bits = 0; bits < ( uint64_t( 1 ) << k ); ++bits )
    {
      std::vector<uint8_t> input( decomposed.layout.total_lines(), 0 );
      for ( uint32_t i = 0; i < k; ++i )
      {
        input[i] = ( bits >> i ) & 1u;
      }
      auto const out = qimg::classical_simulate( decomposed, input );
      uint8_t const expected_target = bits == ( uint64_t( 1 ) << k ) - 1;
      outcome.require( out[decomposed.layout.color_line( 0, 0 )] == expected_target,
                       "k=" + std::to_string( k ) + ": wrong target bit" );
      for ( uint32_t i = 0; i < k; ++i )
      {
        outcome.require( out[i] == input[i], "k=" + std::to_string( k ) + ": control corrupted" );
      }
      for ( uint32_t a = 0; a < decomposed.layout.ancilla_lines; ++a )
      {
        outcome.require( out[decomposed.layout.ancilla_line( a )] == 0,
                         "k=" + std::to_string( k ) + ": ancilla not restored" );
      }
    }
  }
  return outcome;
}

/* 5. the prepared 2x2 reference circuit puts amplitude 0.5 on exactly the
 *    four encoded basis states, within 1e-9, in under a second */
criterion_outcome criterion_statevector()
{
  criterion_outcome outcome;
  auto const start = clock_type::now();
  auto const img = reference_image();
  auto const circ = compile_image( img );
  outcome.require( circ.layout.total_lines() == 10, "expected a 10-qubit circuit" );
  auto const state = qimg::statevector_simulate( circ );

  std::set<uint64_t> expected;
  for ( uint32_t y = 0; y < 2; ++y )
  {
    for ( uint32_t x = 0; x < 2; ++x )
    {
      expected.insert( ( uint64_t( y ) << 9 ) | ( uint64_t( x ) << 8 ) | img.value( y, x ) );
    }
  }
  for ( uint64_t index = 0; index < state.size(); ++index )
  {
    double const magnitude = std::abs( state.amplitude( index ) );
    if ( expected.count( index ) )
    {
      outcome.require( std::abs( magnitude - 0.5 ) < 1e-9, "encoded amplitude off at basis state " +
                                                               std::to_string( index ) );
    }
    else
    {
      outcome.require( magnitude < 1e-9, "stray amplitude at basis state " + std::to_string( index ) );
    }
  }
  double const elapsed = seconds_since( start );
  outcome.require( elapsed < 1.0, "took " + std::to_string( elapsed ) + " s, budget 1 s" );
  return outcome;
}

/* 6. 200 random images up to 16x16: bitwise cover equivalence and a clean
 *    verification report for every one */
criterion_outcome criterion_random_image_oracles()
{
  criterion_outcome outcome;
  std::mt19937_64 rng( 2026 );
  for ( int round = 0; round < 200 && outcome.passed; ++round )
  {
    uint32_t const rows = 1 + static_cast<uint32_t>( rng() % 16 );
    uint32_t const cols = 1 + static_cast<uint32_t>( rng() % 16 );
    std::vector<uint8_t> pixels( static_cast<size_t>( rows ) * cols );
    for ( auto& p : pixels )
    {
      p = static_cast<uint8_t>( rng() & 0xff );
    }
    qimg::neqr_image const img( rows, cols, 1, std::move( pixels ) );

    std::vector<qimg::color_line_cover> covers;
    for ( uint32_t bit = 0; bit < img.q(); ++bit )
    {
      auto const raw = qimg::bitplane_cover( img, 0, bit );
      auto minimized = qimg::minimize( raw.cover );
      auto const check = qimg::check_equivalence( raw.cover, minimized );
      outcome.require( check.equivalent && check.exhaustive,
                       "bitplane " + std::to_string( bit ) + " not equivalent after minimization" );
      covers.push_back( { 0, bit, std::move( minimized ) } );
    }
    qimg::qubit_layout const layout{ img.num_position_vars(), 1, img.q(), 0 };
    auto const circ =
        qimg::decompose_multicontrol( qimg::xgate_lowering( qimg::synthesize( covers, layout ) ) );
    auto const report = qimg::verify_image( img, circ );
    outcome.require( report.mismatches.empty(), "image round " + std::to_string( round ) + ": mismatches" );
    outcome.require( report.position_lines_restored,
                     "image round " + std::to_string( round ) + ": position lines" );
    outcome.require( report.ancillas_clean, "image round " + std::to_string( round ) + ": ancillas" );
  }
  return outcome;
}

/* 7. a 128x128 image whose value depends only on y compresses at >= 99% and
 *    leaves every x bit don't-care */
criterion_outcome criterion_structured_compression()
{
  criterion_outcome outcome;
  uint32_t const size = 128;
  std::vector<uint8_t> pixels( static_cast<size_t>( size ) * size );
  for ( uint32_t y = 0; y < size; ++y )
  {
    for ( uint32_t x = 0; x < size; ++x )
    {
      pixels[y * size + x] = static_cast<uint8_t>( ( y * 2 ) & 0xff );
    }
  }
  qimg::neqr_image const img( size, size, 1, std::move( pixels ) );

  uint64_t initial = 0;
  uint64_t minimized_count = 0;
  for ( uint32_t bit = 0; bit < img.q(); ++bit )
  {
    auto const raw = qimg::bitplane_cover( img, 0, bit ).cover;
    auto const minimized = qimg::minimize( raw );
    initial += raw.size();
    minimized_count += minimized.size();
    for ( auto const& c : minimized.cubes )
    {
      for ( uint32_t v = img.h(); v < c.num_vars(); ++v )
      {
        outcome.require( c.at( v ) == qimg::trit::dc, "cube " + c.str() + " keeps an x literal" );
      }
    }
  }
  double const ratio = qimg::compression_ratio_percent( initial, minimized_count );
  outcome.require( ratio >= 99.0, "compression ratio " + std::to_string( ratio ) + "% below 99%" );
  return outcome;
}

/* 8. throughput: random 128x128 grayscale under 30 s, 200x200 RGB under 120 s */
criterion_outcome criterion_throughput()
{
  criterion_outcome outcome;
  {
    std::mt19937_64 rng( 4242 );
    std::vector<uint8_t> pixels( 128 * 128 );
    for ( auto& p : pixels )
    {
      p = static_cast<uint8_t>( rng() & 0xff );
    }
    qimg::neqr_image const img( 128, 128, 1, std::move( pixels ) );
    auto const start = clock_type::now();
    for ( uint32_t bit = 0; bit < 8; ++bit )
    {
      auto const minimized = qimg::minimize( qimg::bitplane_cover( img, 0, bit ).cover );
      outcome.require( !minimized.empty(), "random plane minimized to nothing" );
    }
    double const elapsed = seconds_since( start );
    outcome.require( elapsed < 30.0,
                     "128x128 grayscale took " + std::to_string( elapsed ) + " s, budget 30 s" );
    std::printf( "    (128x128 grayscale, 8 planes: %.3f s)\n", elapsed );
  }
  {
    std::mt19937_64 rng( 777 );
    std::vector<uint8_t> pixels( 200 * 200 * 3 );
    for ( auto& p : pixels )
    {
      p = static_cast<uint8_t>( rng() & 0xff );
    }
    qimg::neqr_image const img( 200, 200, 3, std::move( pixels ) );
    auto const start = clock_type::now();
    uint64_t initial = 0, minimized_total = 0;
    for ( uint32_t channel = 0; channel < 3; ++channel )
    {
      for ( uint32_t bit = 0; bit < 8; ++bit )
      {
        auto const raw = qimg::bitplane_cover( img, channel, bit ).cover;
        initial += raw.size();
        minimized_total += qimg::minimize( raw ).size();
      }
    }
    double const elapsed = seconds_since( start );
    outcome.require( elapsed < 120.0,
                     "200x200 RGB took " + std::to_string( elapsed ) + " s, budget 120 s" );
    outcome.require( minimized_total <= initial, "RGB run grew the cover" );
    std::printf( "    (200x200 RGB, 24 planes, %llu -> %llu cubes: %.3f s)\n",
                 static_cast<unsigned long long>( initial ),
                 static_cast<unsigned long long>( minimized_total ), elapsed );
  }
  return outcome;
}

/* 9. monotone cube counts and byte-identical reruns across a random suite */
criterion_outcome criterion_monotone_deterministic()
{
  criterion_outcome outcome;
  std::mt19937_64 rng( 31337 );
  for ( int round = 0; round < 60 && outcome.passed; ++round )
  {
    uint32_t const rows = 1 + static_cast<uint32_t>( rng() % 16 );
    uint32_t const cols = 1 + static_cast<uint32_t>( rng() % 16 );
    std::vector<uint8_t> pixels( static_cast<size_t>( rows ) * cols );
    for ( auto& p : pixels )
    {
      p = static_cast<uint8_t>( rng() & 0xff );
    }
    qimg::neqr_image const img( rows, cols, 1, std::move( pixels ) );

    std::vector<qimg::color_line_cover> covers;
    for ( uint32_t bit = 0; bit < img.q(); ++bit )
    {
      auto const raw = qimg::bitplane_cover( img, 0, bit ).cover;
      auto first = qimg::minimize( raw );
      auto second = qimg::minimize( raw );
      outcome.require( first.size() <= raw.size(), "minimize grew a cover" );
      outcome.require( first == second, "two runs disagreed" );
      covers.push_back( { 0, bit, std::move( first ) } );
    }
    qimg::qubit_layout const layout{ img.num_position_vars(), 1, img.q(), 0 };
    auto const circ =
        qimg::decompose_multicontrol( qimg::xgate_lowering( qimg::synthesize( covers, layout ) ) );
    outcome.require( qimg::emit_qasm( circ ) == qimg::emit_qasm( circ ), "emission not reproducible" );
  }
  return outcome;
}

} /* namespace */

int main()
{
  struct entry
  {
    char const* name;
    std::function<criterion_outcome()> run;
  };
  std::vector<entry> const criteria{
      { "1: three-minterm cover minimizes to {0-, 10} in under 1 ms", criterion_minterm_reduction },
      { "2: merge/rotate trace reaches {0-, 1-}, {-0, -1}, then {--}", criterion_step_trace },
      { "3: mask walk [11, 01, 00, 10] lowers to the exact X placement", criterion_lowering_walk },
      { "4: k-control ladder uses 2(k-1) Toffolis + 1 CNOT, k-1 clean ancillas (k=3..8)",
        criterion_decomposition },
      { "5: 2x2 reference circuit carries amplitude 0.5 on its four basis states", criterion_statevector },
      { "6: 200 random images: exhaustive cover equivalence and clean verification",
        criterion_random_image_oracles },
      { "7: y-structured 128x128 image compresses >= 99% with x bits don't-care",
        criterion_structured_compression },
      { "8: 128x128 grayscale < 30 s and 200x200 RGB < 120 s", criterion_throughput },
      { "9: minimization is monotone and reruns are byte-identical", criterion_monotone_deterministic },
  };

  int failures = 0;
  for ( auto const& criterion : criteria )
  {
    auto const start = clock_type::now();
    auto const outcome = criterion.run();
    double const elapsed = seconds_since( start );
    if ( outcome.passed )
    {
      std::printf( "[PASS] criterion %s (%.3f s)\n", criterion.name, elapsed );
    }
    else
    {
      std::printf( "[FAIL] criterion %s: %s\n", criterion.name, outcome.detail.c_str() );
      ++failures;
    }
  }
  std::printf( "%zu criteria, %d failed\n", criteria.size(), failures );
  return failures == 0 ? 0 : 1;
}
